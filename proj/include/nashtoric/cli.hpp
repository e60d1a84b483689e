#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nashtoric/integer.hpp"
#include "nashtoric/lattice.hpp"

namespace nashtoric::cli {

enum class Command { resolve, summary, bounds, charts, ideal, check };

struct RunRequest {
  Command command;
  std::string input;        // inline generator text; unused for check
  std::string batch_path;   // check only
  bool json = false;
  unsigned degree = 4;      // ideal: binomial degree bound
  unsigned depth = 8;       // charts: iteration depth cap
  std::uint64_t cap = 1'000'000;
};

/// Exit codes: 0 success, 2 invalid input, 3 valid but inapplicable,
/// 4 internal inconsistency or iteration cap.
struct RunReport {
  std::string out;
  std::string err;
  int exit_code = 0;
};

/// Runs one command. Never throws; failures land in err/exit_code as a
/// single line "error[Name]: message".
RunReport run(const RunRequest& request);

/// "12, 28, 33" -> integers. Throws error(bad_input) on garbage.
std::vector<Int> parse_curve_text(const std::string& text);

/// "(1,0), (1,1)" -> vectors. Also accepts curve text as dimension 1.
std::vector<Vec> parse_vector_text(const std::string& text);

}  // namespace nashtoric::cli
