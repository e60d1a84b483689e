#include "nashtoric/nash_curve.hpp"

#include <utility>

#include "nashtoric/error.hpp"

namespace nashtoric {

Int DivisionSummary::q_sum() const {
  Int sum = 0;
  for (const DivisionRow& row : rows) sum += row.q;
  return sum;
}

CurveGenerators nash_step(const CurveGenerators& a) {
  if (a.size() == 1) {
    if (a.contains_one()) return a;
    fail(errc::singleton_input,
         "nash step on singleton " + to_string(a.min()));
  }
  const Int& m = a.min();
  std::vector<Int> next{m};
  for (std::size_t i = 1; i < a.size(); ++i) {
    next.push_back(a.elements()[i] - m);
  }
  return CurveGenerators::make(std::move(next));
}

ResolutionTrace resolve(const CurveGenerators& a, std::uint64_t cap) {
  ResolutionTrace trace;
  trace.steps.push_back(a);
  while (!trace.steps.back().contains_one()) {
    if (trace.steps.size() > cap) {
      fail(errc::iteration_cap,
           "no 1 after " + std::to_string(cap) + " steps");
    }
    trace.steps.push_back(nash_step(trace.steps.back()));
  }
  trace.multiplicities.reserve(trace.steps.size());
  trace.embedding_dims.reserve(trace.steps.size());
  for (const CurveGenerators& s : trace.steps) {
    trace.multiplicities.push_back(s.min());
    trace.embedding_dims.push_back(minimal_generators(s).size());
  }
  return trace;
}

DivisionSummary division_summary(const CurveGenerators& a, std::uint64_t cap) {
  if (a.contains_one()) {
    fail(errc::already_smooth, "1 is a generator; no division to perform");
  }
  DivisionSummary summary;
  CurveGenerators cur = a;
  Int steps_taken = 0;
  while (!cur.contains_one()) {
    const Int a1 = cur.min();
    Int a2 = 0;
    for (const Int& e : cur.elements()) {
      if (e % a1 != 0) {
        a2 = e;
        break;
      }
    }
    Int q = a2 / a1;
    Int r = a2 % a1;
    steps_taken += q;
    if (steps_taken > cap) {
      fail(errc::iteration_cap,
           "no 1 after " + std::to_string(cap) + " steps");
    }
    for (Int s = 0; s < q; ++s) cur = nash_step(cur);
    summary.rows.push_back(DivisionRow{a1, a2, q, r, cur});
  }
  return summary;
}

Int min_drop_steps(const CurveGenerators& a) {
  if (a.contains_one()) {
    fail(errc::already_smooth, "1 is a generator; the multiplicity is final");
  }
  const Int& a1 = a.min();
  for (const Int& e : a.elements()) {
    if (e % a1 != 0) return e / a1;
  }
  fail(errc::gcd_not_one, "every element is a multiple of the minimum");
}

TraceCheck trace_invariants(const ResolutionTrace& trace) {
  TraceCheck check;
  check.multiplicities.reserve(trace.steps.size());
  check.embedding_dims.reserve(trace.steps.size());
  for (const CurveGenerators& s : trace.steps) {
    check.multiplicities.push_back(s.min());
    check.embedding_dims.push_back(minimal_generators(s).size());
  }
  check.multiplicities_non_increasing = true;
  check.embedding_dims_non_increasing = true;
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    if (check.multiplicities[i] > check.multiplicities[i - 1]) {
      check.multiplicities_non_increasing = false;
    }
    if (check.embedding_dims[i] > check.embedding_dims[i - 1]) {
      check.embedding_dims_non_increasing = false;
    }
  }
  return check;
}

}  // namespace nashtoric
