#pragma once

#include <stdexcept>
#include <string>

namespace nashtoric {

enum class errc {
  bad_input,              // unparsable or structurally invalid input
  non_positive_element,   // curve generator < 1
  gcd_not_one,            // curve generators with gcd > 1
  singleton_input,        // nash step on {a} with a > 1
  iteration_cap,          // resolution exceeded the configured cap
  already_smooth,         // operation undefined when 1 is a generator
  lattice_not_full,       // vectors do not generate Z^d
  origin_in_hull,         // 0 lies in the convex hull of the vectors
  singular_pivot,         // pivot columns have determinant 0
  unsupported_dimension,  // smoothness/iteration implemented for d <= 2 only
  dimension_mismatch,     // vector length does not match the configuration
};

/// Stable name used in CLI diagnostics, e.g. "GcdNotOne".
const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace nashtoric
