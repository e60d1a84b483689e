#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "nashtoric/integer.hpp"

namespace nashtoric {

/// Generator set of a numerical semigroup: finitely many positive integers
/// with gcd 1, kept sorted strictly ascending. Duplicates are merged on
/// construction. The set {1} is allowed and generates all of N.
class CurveGenerators {
 public:
  /// Sorts, merges duplicates, and checks the invariants. Throws
  /// error(non_positive_element) or error(gcd_not_one); empty input is
  /// bad_input.
  static CurveGenerators make(std::vector<Int> raw);

  const std::vector<Int>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Int& min() const noexcept { return elems_.front(); }
  const Int& max() const noexcept { return elems_.back(); }
  bool contains(const Int& x) const;
  bool contains_one() const { return elems_.front() == 1; }

  bool operator==(const CurveGenerators&) const = default;

 private:
  explicit CurveGenerators(std::vector<Int> sorted) : elems_(std::move(sorted)) {}

  std::vector<Int> elems_;
};

std::ostream& operator<<(std::ostream& os, const CurveGenerators& a);

/// Certificate that target = sum coefficients[i] * elements()[i], all
/// coefficients nonnegative.
struct MembershipWitness {
  std::vector<Int> coefficients;
  Int target;
};

bool verify_witness(const CurveGenerators& a, const MembershipWitness& w);

/// Drops every element that is a proper multiple of min(A). The generated
/// semigroup is unchanged; normalize({...,1,...}) == {1}.
CurveGenerators normalize(const CurveGenerators& a);

/// Decides x in N·A for x >= 0 and returns a witness when it holds.
std::optional<MembershipWitness> is_member(const CurveGenerators& a, const Int& x);

/// The unique minimal generating set: elements not representable from the
/// others. Result generates the same semigroup and is itself minimal.
CurveGenerators minimal_generators(const CurveGenerators& a);

/// Smallest nonzero element of the semigroup, i.e. min(A).
Int multiplicity(const CurveGenerators& a);

}  // namespace nashtoric
