#include "nashtoric/semigroup.hpp"

#include <algorithm>
#include <utility>

#include "nashtoric/error.hpp"

namespace nashtoric {
namespace {

// Bezout coefficient x with a*x + b*y = gcd(a, b), for a, b > 0.
Int bezout_x(Int a, Int b) {
  Int x0 = 1, x1 = 0;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return x0;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int x = bezout_x(a % m, m) % m;
  if (x < 0) x += m;
  return x;
}

// Nonnegative (la, lb) with la*a + lb*b == t, if any. Picks the solution
// with the smallest coefficient on b.
std::optional<std::pair<Int, Int>> solve_two(const Int& a, const Int& b,
                                             const Int& t) {
  Int g = gcd(a, b);
  if (t % g != 0) return std::nullopt;
  Int ar = a / g, br = b / g, tr = t / g;
  if (ar == 1) return std::make_pair(tr, Int(0));
  Int mu = (tr % ar) * mod_inverse(br % ar, ar) % ar;
  if (mu * br > tr) return std::nullopt;
  return std::make_pair((tr - mu * br) / ar, mu);
}

// Fills coeffs[0..k) with a representation of t over gens[0..k) (ascending),
// largest generator first. Complete: returns false only when none exists.
bool represent(const std::vector<Int>& gens, std::size_t k, const Int& t,
               std::vector<Int>& coeffs) {
  if (t == 0) {
    std::fill_n(coeffs.begin(), k, Int(0));
    return true;
  }
  if (k == 0) return false;
  if (k == 1) {
    if (t % gens[0] != 0) return false;
    coeffs[0] = t / gens[0];
    return true;
  }
  if (k == 2) {
    auto pair = solve_two(gens[0], gens[1], t);
    if (!pair) return false;
    coeffs[0] = pair->first;
    coeffs[1] = pair->second;
    return true;
  }
  const Int& g = gens[k - 1];
  for (Int lam = t / g; lam >= 0; --lam) {
    if (represent(gens, k - 1, t - lam * g, coeffs)) {
      coeffs[k - 1] = lam;
      return true;
    }
  }
  return false;
}

}  // namespace

CurveGenerators CurveGenerators::make(std::vector<Int> raw) {
  if (raw.empty()) fail(errc::bad_input, "generator set is empty");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (raw.front() < 1) {
    fail(errc::non_positive_element,
         "generator " + to_string(raw.front()) + " is not positive");
  }
  Int g = 0;
  for (const Int& a : raw) g = gcd(g, a);
  if (g != 1) {
    fail(errc::gcd_not_one, "generators have gcd " + to_string(g));
  }
  return CurveGenerators(std::move(raw));
}

bool CurveGenerators::contains(const Int& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::ostream& operator<<(std::ostream& os, const CurveGenerators& a) {
  os << '{';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) os << ", ";
    os << a.elements()[i];
  }
  return os << '}';
}

bool verify_witness(const CurveGenerators& a, const MembershipWitness& w) {
  if (w.coefficients.size() != a.size()) return false;
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (w.coefficients[i] < 0) return false;
    sum += w.coefficients[i] * a.elements()[i];
  }
  return sum == w.target;
}

CurveGenerators normalize(const CurveGenerators& a) {
  const Int& m = a.min();
  std::vector<Int> kept{m};
  for (const Int& e : a.elements()) {
    if (e % m != 0) kept.push_back(e);
  }
  return CurveGenerators::make(std::move(kept));
}

std::optional<MembershipWitness> is_member(const CurveGenerators& a,
                                           const Int& x) {
  if (x < 0) fail(errc::bad_input, "membership target is negative");
  std::vector<Int> coeffs(a.size());
  if (!represent(a.elements(), a.size(), x, coeffs)) return std::nullopt;
  return MembershipWitness{std::move(coeffs), x};
}

CurveGenerators minimal_generators(const CurveGenerators& a) {
  if (a.size() == 1) return a;
  std::vector<Int> kept;
  std::vector<Int> others(a.size() - 1);
  std::vector<Int> scratch(a.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) others.push_back(a.elements()[j]);
    }
    if (!represent(others, others.size(), a.elements()[i], scratch)) {
      kept.push_back(a.elements()[i]);
    }
  }
  return CurveGenerators::make(std::move(kept));
}

Int multiplicity(const CurveGenerators& a) { return a.min(); }

}  // namespace nashtoric
