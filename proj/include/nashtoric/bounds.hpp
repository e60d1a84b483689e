#pragma once

#include <cstdint>

#include "nashtoric/semigroup.hpp"

namespace nashtoric {

/// v(A): the smallest a_i such that gcd(a_1,...,a_i) = 1. Equals 1 exactly
/// when 1 is a generator.
Int v_of(const CurveGenerators& a);

/// floor(v(A)/2), an upper bound for eta(A). Requires 1 not in a.
Int eta_upper_bound(const CurveGenerators& a);

/// Fibonacci with F_1 = 1, F_2 = 2, F_m = F_{m-1} + F_{m-2}. Requires m >= 1.
Int fibonacci(std::uint64_t m);

/// Checks a_1 >= F_{delta+1} and a_2 >= F_{delta+2}. Requires 1 < a_1 and
/// at least two elements; delta >= 1.
bool check_fib_lower(const CurveGenerators& a, std::uint64_t delta);

/// Smallest m with a1 < F_{m+1} or a2 < F_{m+2}; a strict upper bound for
/// delta. Requires 1 < a1 < a2.
std::uint64_t delta_upper_fib(const Int& a1, const Int& a2);

/// min(5*k1, 5*k2 - 1) where k1, k2 are the decimal digit counts of a1, a2;
/// a strict upper bound for delta. Requires 1 < a1 < a2.
std::uint64_t delta_upper_digits(const Int& a1, const Int& a2);

struct BoundReport {
  Int v_value;
  Int eta_bound;                  // floor(v/2)
  Int fib_lower_a1;               // F_{delta+1}, must be <= a_1
  Int fib_lower_a2;               // F_{delta+2}, must be <= a_2
  bool fib_lower_holds;
  std::uint64_t delta_fib_bound;
  std::uint64_t delta_digit_bound;
};

/// Assembles every bound for a set with 1 < min(a), given its delta.
BoundReport make_bound_report(const CurveGenerators& a, std::uint64_t delta);

}  // namespace nashtoric
