#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nashtoric/semigroup.hpp"

namespace nashtoric {

inline constexpr std::uint64_t kDefaultIterationCap = 1'000'000;

/// Trace of iterated Nash steps, starting at the input set and ending at the
/// first set containing 1. eta() is the number of steps taken.
struct ResolutionTrace {
  std::vector<CurveGenerators> steps;
  std::vector<Int> multiplicities;           // min of each set
  std::vector<std::size_t> embedding_dims;   // |minimal_generators| of each set

  std::size_t eta() const { return steps.size() - 1; }
};

/// One division algorithm read off a trace: a2 = a1*q + r where a1 is the
/// current multiplicity, a2 the smallest element not divisible by a1, and
/// set_after the trace set q steps later (its min is r).
struct DivisionRow {
  Int a1;
  Int a2;
  Int q;
  Int r;
  CurveGenerators set_after;
};

struct DivisionSummary {
  std::vector<DivisionRow> rows;

  std::size_t delta() const { return rows.size(); }
  Int q_sum() const;
};

/// One Nash step: {a1} together with {a - a1 : a > a1}. Collisions merge.
/// Defined for every valid set except singletons {a} with a > 1.
CurveGenerators nash_step(const CurveGenerators& a);

/// Iterates nash_step until 1 appears. Throws error(iteration_cap) if more
/// than cap steps would be needed.
ResolutionTrace resolve(const CurveGenerators& a,
                        std::uint64_t cap = kDefaultIterationCap);

/// Segments the trace of a into division algorithms. Requires 1 not in a
/// (throws already_smooth). delta() of the result counts the divisions and
/// the q values sum to eta.
DivisionSummary division_summary(const CurveGenerators& a,
                                 std::uint64_t cap = kDefaultIterationCap);

/// Smallest k with min(A^k) < min(A), computed in closed form as
/// floor(a2'/a1) where a2' is the smallest element not divisible by a1.
/// Requires 1 not in a.
Int min_drop_steps(const CurveGenerators& a);

/// Per-step multiplicity and embedding dimension, recomputed from the trace
/// sets, with monotonicity flags for both sequences.
struct TraceCheck {
  std::vector<Int> multiplicities;
  std::vector<std::size_t> embedding_dims;
  bool multiplicities_non_increasing;
  bool embedding_dims_non_increasing;
};

TraceCheck trace_invariants(const ResolutionTrace& trace);

}  // namespace nashtoric
