#include "nashtoric/lattice.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nashtoric/error.hpp"
#include "nashtoric/semigroup.hpp"

namespace nashtoric {
namespace {

using Rat = boost::multiprecision::cpp_rational;

Int dot(const Vec& w, const Vec& v) {
  Int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
  return s;
}

Int det_recursive(const std::vector<const Vec*>& rows,
                  std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.size() - row == 1) return (*rows[row])[cols[row]];
  Int acc = 0;
  int sign = 1;
  for (std::size_t i = row; i < cols.size(); ++i) {
    const Int head = (*rows[row])[cols[i]];
    if (head != 0) {
      // Rotation keeps the remaining columns in relative order, so the
      // alternating sign is the whole cofactor sign.
      std::rotate(cols.begin() + row, cols.begin() + i, cols.begin() + i + 1);
      acc += sign * head * det_recursive(rows, cols, row + 1);
      std::rotate(cols.begin() + row, cols.begin() + row + 1,
                  cols.begin() + i + 1);
    }
    sign = -sign;
  }
  return acc;
}

// Determinant of the d x d matrix whose rows are the selected vectors.
Int det_of(const std::vector<Vec>& vectors,
           const std::vector<std::size_t>& index) {
  std::vector<const Vec*> rows;
  rows.reserve(index.size());
  for (std::size_t i : index) rows.push_back(&vectors[i]);
  std::vector<std::size_t> cols(index.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_recursive(rows, cols, 0);
}

// One linear constraint c . w >= rhs with integer data.
struct Ineq {
  std::vector<Int> c;
  Int rhs;

  bool operator<(const Ineq& other) const {
    if (c != other.c) return c < other.c;
    return rhs < other.rhs;
  }
};

void normalize_ineq(Ineq& q) {
  Int g = abs(q.rhs);
  for (const Int& x : q.c) g = gcd(g, abs(x));
  if (g > 1) {
    for (Int& x : q.c) x /= g;
    q.rhs /= g;
  }
}

// Exact Fourier-Motzkin: decides whether {w : <w, a_i> >= 1 for all i} is
// nonempty and, if so, produces an integer point (the region is closed under
// scaling by factors >= 1, so a rational point scales to an integer one).
std::optional<Vec> fourier_motzkin(const std::vector<Vec>& vectors,
                                   std::size_t d) {
  std::vector<std::vector<Ineq>> stages(d + 1);
  for (const Vec& a : vectors) {
    Ineq q{a, Int(1)};
    normalize_ineq(q);
    stages[d].push_back(std::move(q));
  }
  for (std::size_t k = d; k >= 1; --k) {
    std::set<Ineq> next;
    const std::size_t var = k - 1;
    std::vector<const Ineq*> pos, neg;
    for (const Ineq& q : stages[k]) {
      if (q.c[var] > 0) {
        pos.push_back(&q);
      } else if (q.c[var] < 0) {
        neg.push_back(&q);
      } else {
        next.insert(q);
      }
    }
    for (const Ineq* p : pos) {
      for (const Ineq* m : neg) {
        Ineq q;
        q.c.resize(d);
        const Int mp = -m->c[var];  // > 0
        const Int pp = p->c[var];   // > 0
        for (std::size_t j = 0; j < d; ++j) {
          q.c[j] = mp * p->c[j] + pp * m->c[j];
        }
        q.rhs = mp * p->rhs + pp * m->rhs;
        normalize_ineq(q);
        next.insert(std::move(q));
      }
    }
    stages[k - 1].assign(next.begin(), next.end());
  }
  for (const Ineq& q : stages[0]) {
    if (q.rhs > 0) return std::nullopt;
  }

  std::vector<Rat> w(d, 0);
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t var = k - 1;
    std::optional<Rat> lo, hi;
    for (const Ineq& q : stages[k]) {
      if (q.c[var] == 0) continue;
      Rat bound = Rat(q.rhs);
      for (std::size_t j = 0; j < var; ++j) bound -= Rat(q.c[j]) * w[j];
      bound /= Rat(q.c[var]);
      if (q.c[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      w[var] = (*lo + *hi) / 2;
    } else if (lo) {
      w[var] = *lo + 1;
    } else if (hi) {
      w[var] = *hi - 1;
    }
  }

  Int scale = 1;
  for (const Rat& x : w) {
    Int den = denominator(x);
    scale = scale / gcd(scale, den) * den;
  }
  Vec result(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rat scaled = w[j] * Rat(scale);
    result[j] = numerator(scaled);
  }
  for (const Vec& a : vectors) {
    if (dot(result, a) <= 0) {
      throw std::logic_error("separator back-substitution failed");
    }
  }
  return result;
}

// Small weight vectors first: every |w|inf = B shell in lexicographic order,
// B = 1, 2, 3, then the exact fallback.
std::optional<Vec> find_separator(const std::vector<Vec>& vectors,
                                  std::size_t d) {
  for (int shell = 1; shell <= 3; ++shell) {
    Vec w(d, Int(-shell));
    while (true) {
      Int norm = 0;
      for (const Int& x : w) norm = std::max(norm, Int(abs(x)));
      if (norm == shell) {
        bool ok = true;
        for (const Vec& a : vectors) {
          if (dot(w, a) <= 0) {
            ok = false;
            break;
          }
        }
        if (ok) return w;
      }
      std::size_t j = d;
      while (j > 0 && w[j - 1] == shell) {
        w[j - 1] = -shell;
        --j;
      }
      if (j == 0) break;
      ++w[j - 1];
    }
  }
  return fourier_motzkin(vectors, d);
}

// Ascending size-k index subsets of [0, n), lexicographic.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Complete bounded search: any representation of t satisfies
// sum lambda_i <w, g_i> = <w, t>, so each coefficient is capped by the
// separator weights.
bool lattice_member(const std::vector<Vec>& gens, const Vec& w,
                    const Vec& target) {
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<Int> weight(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) weight[i] = dot(w, gens[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight[a] > weight[b];
  });

  struct Search {
    const std::vector<Vec>& gens;
    const std::vector<Int>& weight;
    const std::vector<std::size_t>& order;
    const Vec& w;

    bool run(std::size_t pos, Vec t, Int budget) const {
      bool zero = std::all_of(t.begin(), t.end(),
                              [](const Int& x) { return x == 0; });
      if (zero) return true;
      if (pos == order.size() || budget <= 0) return false;
      const Vec& g = gens[order[pos]];
      if (pos + 1 == order.size()) {
        std::size_t j0 = 0;
        while (g[j0] == 0) ++j0;
        if (t[j0] % g[j0] != 0) return false;
        Int lam = t[j0] / g[j0];
        if (lam < 0) return false;
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (lam * g[j] != t[j]) return false;
        }
        return true;
      }
      const Int& u = weight[order[pos]];
      for (Int lam = budget / u; lam >= 0; --lam) {
        Vec rest(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) rest[j] = t[j] - lam * g[j];
        if (run(pos + 1, std::move(rest), budget - lam * u)) return true;
      }
      return false;
    }
  };

  Int budget = dot(w, target);
  if (budget < 0) return false;
  if (budget == 0) {
    return std::all_of(target.begin(), target.end(),
                       [](const Int& x) { return x == 0; });
  }
  return Search{gens, weight, order, w}.run(0, target, budget);
}

CurveGenerators to_curve(const LatticeConfig& config) {
  std::vector<Int> values;
  values.reserve(config.size());
  for (const Vec& a : config.vectors()) values.push_back(abs(a[0]));
  return CurveGenerators::make(std::move(values));
}

ChartNode build_tree(const LatticeConfig& config,
                     std::vector<std::size_t> via_pivot, unsigned depth,
                     unsigned max_depth) {
  ChartNode node{config, std::move(via_pivot), ChartNode::Status::smooth, {}};
  if (is_smooth(config)) {
    node.status = ChartNode::Status::smooth;
    return node;
  }
  if (depth == max_depth) {
    node.status = ChartNode::Status::unresolved;
    return node;
  }
  node.status = ChartNode::Status::expanded;
  for (Chart& c : all_charts(config)) {
    if (!c.retained) continue;
    node.children.push_back(
        build_tree(*c.config, std::move(c.pivot), depth + 1, max_depth));
  }
  return node;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ", ";
    os << v[i];
  }
  return os << ')';
}

LatticeConfig LatticeConfig::validate(std::vector<Vec> vectors) {
  if (vectors.empty()) fail(errc::bad_input, "vector list is empty");
  const std::size_t d = vectors.front().size();
  if (d < 1) fail(errc::bad_input, "vectors must have dimension >= 1");
  for (const Vec& a : vectors) {
    if (a.size() != d) {
      fail(errc::bad_input, "vectors of mixed dimension");
    }
  }
  std::vector<Vec> unique_vectors;
  for (Vec& a : vectors) {
    if (std::find(unique_vectors.begin(), unique_vectors.end(), a) ==
        unique_vectors.end()) {
      unique_vectors.push_back(std::move(a));
    }
  }

  auto separator = find_separator(unique_vectors, d);
  if (!separator) {
    fail(errc::origin_in_hull,
         "0 is a convex combination of the vectors; no separating "
         "functional exists");
  }

  const std::size_t n = unique_vectors.size();
  if (n < d) {
    fail(errc::lattice_not_full,
         "fewer vectors than the dimension; they cannot generate the "
         "lattice");
  }
  Int g = 0;
  std::vector<std::size_t> idx(d);
  for (std::size_t j = 0; j < d; ++j) idx[j] = j;
  do {
    g = gcd(g, abs(det_of(unique_vectors, idx)));
    if (g == 1) break;
  } while (next_combination(idx, n));
  if (g != 1) {
    fail(errc::lattice_not_full,
         g == 0 ? "all maximal minors vanish"
                : "maximal minors have gcd " + to_string(g));
  }
  return LatticeConfig(d, std::move(unique_vectors), std::move(*separator));
}

Chart chart(const LatticeConfig& config, std::vector<std::size_t> pivot) {
  const std::size_t d = config.dim();
  const std::size_t n = config.size();
  std::sort(pivot.begin(), pivot.end());
  if (pivot.size() != d ||
      std::adjacent_find(pivot.begin(), pivot.end()) != pivot.end() ||
      pivot.back() >= n) {
    fail(errc::bad_input, "pivot needs " + std::to_string(d) +
                              " distinct indices below " + std::to_string(n));
  }
  if (det_of(config.vectors(), pivot) == 0) {
    fail(errc::singular_pivot, "pivot vectors are linearly dependent");
  }

  std::vector<Vec> gens;
  for (std::size_t k : pivot) gens.push_back(config.vectors()[k]);
  std::vector<std::size_t> probe = pivot;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(pivot.begin(), pivot.end(), j) != pivot.end()) continue;
    for (std::size_t slot = 0; slot < d; ++slot) {
      probe = pivot;
      probe[slot] = j;
      std::sort(probe.begin(), probe.end());
      if (det_of(config.vectors(), probe) == 0) continue;
      Vec delta(d);
      for (std::size_t t = 0; t < d; ++t) {
        delta[t] = config.vectors()[j][t] - config.vectors()[pivot[slot]][t];
      }
      gens.push_back(std::move(delta));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Chart result{std::move(pivot), gens, false, std::nullopt};
  if (find_separator(gens, d)) {
    result.retained = true;
    result.config = LatticeConfig::validate(std::move(gens));
  }
  return result;
}

std::vector<Chart> all_charts(const LatticeConfig& config) {
  std::vector<Chart> charts;
  std::vector<std::size_t> idx(config.dim());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  do {
    if (det_of(config.vectors(), idx) == 0) continue;
    charts.push_back(chart(config, idx));
  } while (next_combination(idx, config.size()));
  return charts;
}

std::vector<Vec> lattice_minimal_generators(const LatticeConfig& config) {
  if (config.dim() > 2) {
    fail(errc::unsupported_dimension,
         "minimal generators implemented for dimension <= 2");
  }
  if (config.dim() == 1) {
    const bool flip = config.vectors().front()[0] < 0;
    CurveGenerators minimal = minimal_generators(to_curve(config));
    std::vector<Vec> out;
    for (const Int& m : minimal.elements()) {
      out.push_back(Vec{flip ? Int(-m) : m});
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Vec> kept;
  std::vector<Vec> others;
  for (std::size_t i = 0; i < config.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < config.size(); ++j) {
      if (j != i) others.push_back(config.vectors()[j]);
    }
    if (!lattice_member(others, config.separator(), config.vectors()[i])) {
      kept.push_back(config.vectors()[i]);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool is_smooth(const LatticeConfig& config) {
  if (config.dim() > 2) {
    fail(errc::unsupported_dimension,
         "smoothness test implemented for dimension <= 2");
  }
  return lattice_minimal_generators(config).size() == config.dim();
}

MonomialIdeal log_jacobian(const LatticeConfig& config) {
  MonomialIdeal ideal;
  std::vector<std::size_t> idx(config.dim());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  do {
    if (det_of(config.vectors(), idx) != 0) ideal.monomials.push_back(idx);
  } while (next_combination(idx, config.size()));
  return ideal;
}

std::vector<BinomialRelation> kernel_binomials(const LatticeConfig& config,
                                               unsigned degree_bound) {
  const std::size_t n = config.size();
  const std::size_t d = config.dim();
  std::vector<BinomialRelation> out;
  std::vector<int> gamma(n, 0);
  Vec partial(d, Int(0));

  // Enumerates gamma with |gamma+|_1, |gamma-|_1 <= degree_bound and first
  // nonzero entry positive; emits those in the kernel of the vector map.
  auto emit = [&]() {
    BinomialRelation rel;
    rel.alpha.resize(n, 0);
    rel.beta.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (gamma[i] > 0) rel.alpha[i] = static_cast<unsigned>(gamma[i]);
      if (gamma[i] < 0) rel.beta[i] = static_cast<unsigned>(-gamma[i]);
    }
    out.push_back(std::move(rel));
  };
  auto rec = [&](auto&& self, std::size_t i, unsigned pos_left,
                 unsigned neg_left, bool any_nonzero) -> void {
    if (i == n) {
      if (!any_nonzero) return;
      if (std::all_of(partial.begin(), partial.end(),
                      [](const Int& x) { return x == 0; })) {
        emit();
      }
      return;
    }
    const Vec& a = config.vectors()[i];
    const int low = any_nonzero ? -static_cast<int>(neg_left) : 0;
    const int high = static_cast<int>(pos_left);
    for (int v = low; v <= high; ++v) {
      gamma[i] = v;
      for (std::size_t t = 0; t < d; ++t) partial[t] += v * a[t];
      self(self, i + 1, v > 0 ? pos_left - v : pos_left,
           v < 0 ? neg_left + v : neg_left, any_nonzero || v != 0);
      for (std::size_t t = 0; t < d; ++t) partial[t] -= v * a[t];
    }
    gamma[i] = 0;
  };
  rec(rec, 0, degree_bound, degree_bound, false);

  std::sort(out.begin(), out.end(),
            [](const BinomialRelation& x, const BinomialRelation& y) {
              if (x.alpha != y.alpha) return x.alpha < y.alpha;
              return x.beta < y.beta;
            });
  return out;
}

bool verify_binomial(const LatticeConfig& config, const BinomialRelation& rel) {
  if (rel.alpha.size() != config.size() || rel.beta.size() != config.size()) {
    fail(errc::dimension_mismatch,
         "exponent vectors need one entry per configuration vector");
  }
  Vec diff(config.dim(), Int(0));
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Int coeff = Int(rel.alpha[i]) - Int(rel.beta[i]);
    if (coeff == 0) continue;
    for (std::size_t t = 0; t < config.dim(); ++t) {
      diff[t] += coeff * config.vectors()[i][t];
    }
  }
  return std::all_of(diff.begin(), diff.end(),
                     [](const Int& x) { return x == 0; });
}

ChartNode iterate_multidim(const LatticeConfig& config, unsigned max_depth) {
  if (config.dim() > 2) {
    fail(errc::unsupported_dimension,
         "chart iteration implemented for dimension <= 2");
  }
  return build_tree(config, {}, 0, max_depth);
}

}  // namespace nashtoric
