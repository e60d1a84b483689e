#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "nashtoric/integer.hpp"

namespace nashtoric {

using Vec = std::vector<Int>;

std::ostream& operator<<(std::ostream& os, const Vec& v);

/// Finite set of lattice points A in Z^d that generates Z^d as a group and
/// has 0 outside its convex hull. Vectors keep their input order (indices are
/// meaningful); exact duplicates are merged. A validated configuration always
/// carries an integer separator w with <w, a_i> > 0 for every a_i.
class LatticeConfig {
 public:
  /// Checks both certificates, 0-not-in-hull first: throws
  /// error(origin_in_hull) when no separating functional exists, then
  /// error(lattice_not_full) when the d x d minors have gcd != 1.
  /// Mixed vector lengths or d < 1 are bad_input.
  static LatticeConfig validate(std::vector<Vec> vectors);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<Vec>& vectors() const noexcept { return vectors_; }
  const Vec& separator() const noexcept { return separator_; }

  bool operator==(const LatticeConfig& other) const {
    return vectors_ == other.vectors_;
  }

 private:
  LatticeConfig(std::size_t dim, std::vector<Vec> vectors, Vec separator)
      : dim_(dim), vectors_(std::move(vectors)), separator_(std::move(separator)) {}

  std::size_t dim_;
  std::vector<Vec> vectors_;
  Vec separator_;
};

/// Affine chart of the Nash modification at a pivot set J0 of d indices:
/// the pivot vectors plus every a_j - a_k with j outside J0, k in J0, where
/// the index set (J0 \ {k}) U {j} still has nonzero determinant. Generators
/// are deduplicated and sorted lexicographically. retained is true when 0
/// stays outside the convex hull; config is present exactly then.
struct Chart {
  std::vector<std::size_t> pivot;    // 0-based, ascending
  std::vector<Vec> generators;
  bool retained;
  std::optional<LatticeConfig> config;
};

/// Exponent vectors of a binomial u^alpha - u^beta in the toric ideal:
/// sum alpha_i a_i = sum beta_i a_i with disjoint supports.
struct BinomialRelation {
  std::vector<unsigned> alpha;
  std::vector<unsigned> beta;
};

/// Square-free monomial ideal given by index sets of variables.
struct MonomialIdeal {
  std::vector<std::vector<std::size_t>> monomials;  // 0-based, each ascending
};

/// Chart at one pivot. pivot must hold d distinct indices; throws
/// error(singular_pivot) when det of the pivot columns is 0.
Chart chart(const LatticeConfig& config, std::vector<std::size_t> pivot);

/// Charts at every pivot with nonzero determinant, in lexicographic pivot
/// order.
std::vector<Chart> all_charts(const LatticeConfig& config);

/// Whether the semigroup N·A is generated by exactly d elements. Implemented
/// for d <= 2 (throws unsupported_dimension above).
bool is_smooth(const LatticeConfig& config);

/// Minimal generating set of N·A, in lexicographic order. d <= 2 only.
std::vector<Vec> lattice_minimal_generators(const LatticeConfig& config);

/// Generators of the log jacobian ideal: one square-free monomial u_J per
/// size-d index set J with det(a_J) != 0, in lexicographic order.
MonomialIdeal log_jacobian(const LatticeConfig& config);

/// All binomial relations with both exponent degrees at most degree_bound,
/// canonical sign (first nonzero of alpha - beta is positive), sorted by
/// (alpha, beta).
std::vector<BinomialRelation> kernel_binomials(const LatticeConfig& config,
                                               unsigned degree_bound);

/// Exact check of sum alpha_i a_i == sum beta_i a_i. Throws
/// error(dimension_mismatch) when the exponent vectors do not have one entry
/// per configuration vector.
bool verify_binomial(const LatticeConfig& config, const BinomialRelation& rel);

/// Tree of iterated Nash modification charts. Children exist only for
/// expanded nodes: one per retained chart of the node's configuration, in
/// pivot order. smooth and unresolved nodes are leaves; unresolved means the
/// depth cap stopped the recursion.
struct ChartNode {
  LatticeConfig config;
  std::vector<std::size_t> via_pivot;  // empty at the root
  enum class Status { smooth, expanded, unresolved } status;
  std::vector<ChartNode> children;
};

/// Expands retained charts recursively up to max_depth. d <= 2 only.
ChartNode iterate_multidim(const LatticeConfig& config, unsigned max_depth);

}  // namespace nashtoric
