#include "nashtoric/bounds.hpp"

#include "nashtoric/error.hpp"

namespace nashtoric {

Int v_of(const CurveGenerators& a) {
  Int g = 0;
  for (const Int& e : a.elements()) {
    g = gcd(g, e);
    if (g == 1) return e;
  }
  fail(errc::gcd_not_one, "generators have gcd " + to_string(g));
}

Int eta_upper_bound(const CurveGenerators& a) {
  if (a.contains_one()) {
    fail(errc::already_smooth, "1 is a generator; eta is 0");
  }
  return v_of(a) / 2;
}

Int fibonacci(std::uint64_t m) {
  if (m < 1) fail(errc::bad_input, "fibonacci index must be >= 1");
  Int prev = 1, cur = 2;  // F_1, F_2
  for (std::uint64_t i = 1; i < m; ++i) {
    Int next = prev + cur;
    prev = cur;
    cur = next;
  }
  return prev;
}

bool check_fib_lower(const CurveGenerators& a, std::uint64_t delta) {
  if (a.contains_one()) {
    fail(errc::already_smooth, "1 is a generator; delta is undefined");
  }
  if (delta < 1) fail(errc::bad_input, "delta must be >= 1");
  return a.elements()[0] >= fibonacci(delta + 1) &&
         a.elements()[1] >= fibonacci(delta + 2);
}

std::uint64_t delta_upper_fib(const Int& a1, const Int& a2) {
  if (!(1 < a1 && a1 < a2)) {
    fail(errc::bad_input, "need 1 < a1 < a2");
  }
  Int f1 = 2, f2 = 3;  // F_{m+1}, F_{m+2} at m = 1
  std::uint64_t m = 1;
  while (a1 >= f1 && a2 >= f2) {
    Int next = f1 + f2;
    f1 = f2;
    f2 = next;
    ++m;
  }
  return m;
}

std::uint64_t delta_upper_digits(const Int& a1, const Int& a2) {
  if (!(1 < a1 && a1 < a2)) {
    fail(errc::bad_input, "need 1 < a1 < a2");
  }
  std::uint64_t k1 = digit_count(a1);
  std::uint64_t k2 = digit_count(a2);
  return std::min(5 * k1, 5 * k2 - 1);
}

BoundReport make_bound_report(const CurveGenerators& a, std::uint64_t delta) {
  BoundReport report;
  report.v_value = v_of(a);
  report.eta_bound = eta_upper_bound(a);
  report.fib_lower_a1 = fibonacci(delta + 1);
  report.fib_lower_a2 = fibonacci(delta + 2);
  report.fib_lower_holds = check_fib_lower(a, delta);
  report.delta_fib_bound = delta_upper_fib(a.elements()[0], a.elements()[1]);
  report.delta_digit_bound =
      delta_upper_digits(a.elements()[0], a.elements()[1]);
  return report;
}

}  // namespace nashtoric
