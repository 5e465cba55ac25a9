#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional algebras over GF(p) given by structure constants.
 *
 * Basis elements b_0..b_{d-1} multiply as b_i b_j = sum_k c[i][j][k] b_k.
 * Algebras built from a bound quiver remember their path basis, their
 * vertex idempotents and their radical (the arrow ideal).
 *
 * Path convention: a path is stored as the list of its arrows in composition
 * order, so the path "b a" (written function-style) means first a, then b.
 */

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppfun/errors.hpp"
#include "ppfun/exactlin.hpp"

namespace ppfun {

struct QuiverArrow {
  std::string name;
  std::size_t source = 0;  // 0-based vertex
  std::size_t target = 0;
  friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

struct PathTerm {
  long long coeff = 1;
  std::vector<std::size_t> arrows;  // composition order, front = applied last
  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

struct QuiverPresentation {
  std::size_t vertices = 0;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;
};

/// A path in a quiver. Trivial paths have no arrows and source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/**
 * Immutable, validated finite-dimensional algebra. Construct through
 * from_structconst() or from_quiver(); both check associativity and the unit.
 */
class Algebra {
 public:
  struct Options {
    std::optional<Vec> unit;
    std::optional<std::vector<Vec>> radical;
    std::optional<std::vector<Vec>> idempotents;
  };

  /// `c` is flattened as c[(i*d + j)*d + k].
  static AlgebraPtr from_structconst(PrimeField f, std::vector<std::string> labels,
                                     const std::vector<long long>& c, Options opts = {}) {
    const std::size_t d = labels.size();
    if (c.size() != d * d * d)
      throw AlgebraError("structure constants must have dim^3 = " + std::to_string(d * d * d) +
                         " entries, got " + std::to_string(c.size()));
    Algebra a(f);
    a.dim_ = d;
    a.labels_ = std::move(labels);
    a.c_.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) a.c_[i] = f.reduce(c[i]);
    a.finish(std::move(opts));
    return std::make_shared<const Algebra>(std::move(a));
  }

  /// Path algebra of a bound quiver, kQ / I. Relations must be admissible.
  static AlgebraPtr from_quiver(PrimeField f, const QuiverPresentation& q,
                                std::size_t max_path_length = 24, std::size_t max_paths = 4096);

  const PrimeField& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return i;
    return std::nullopt;
  }
  std::uint32_t c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const Vec& structconst() const { return c_; }
  const Vec& unit() const { return unit_; }
  const std::optional<QuiverPresentation>& quiver() const { return quiver_; }
  const std::vector<Path>& basis_paths() const { return basis_paths_; }
  const std::optional<std::vector<Vec>>& radical_basis() const { return radical_; }
  const std::optional<std::vector<Vec>>& idempotents() const { return idempotents_; }
  /// Basis indices generating the algebra as a unital algebra.
  const std::vector<std::size_t>& generators() const { return generators_; }

  Vec basis_element(std::size_t i) const { return unit_vec(dim_, i); }
  Vec zero() const { return zero_vec(dim_); }

  Vec multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("algebra element length");
    Vec out(dim_, 0);
    const std::uint32_t p = f_.prime();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const std::uint32_t s = (x[i] * y[j]) % p;
        if (!s) continue;
        const std::uint32_t* row = c_.data() + (i * dim_ + j) * dim_;
        for (std::size_t k = 0; k < dim_; ++k) out[k] = (out[k] + s * row[k]) % p;
      }
    }
    return out;
  }

  /// Matrix of y -> x y.
  Matrix left_mult(const Vec& x) const {
    Matrix m(f_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec col = multiply(x, basis_element(j));
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
  }
  /// Matrix of y -> y x.
  Matrix right_mult(const Vec& x) const {
    Matrix m(f_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec col = multiply(basis_element(j), x);
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  /// Opposite algebra: c_op[i][j][k] = c[j][i][k]. Quiver data is reversed.
  AlgebraPtr opposite() const {
    Algebra o(*this);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) o.c_[(i * dim_ + j) * dim_ + k] = c(j, i, k);
    if (quiver_) {
      QuiverPresentation q = *quiver_;
      for (auto& a : q.arrows) std::swap(a.source, a.target);
      for (auto& rel : q.relations)
        for (auto& t : rel) std::reverse(t.arrows.begin(), t.arrows.end());
      o.quiver_ = std::move(q);
      for (auto& p : o.basis_paths_) {
        std::swap(p.source, p.target);
        std::reverse(p.arrows.begin(), p.arrows.end());
      }
    }
    o.compute_generators();
    return std::make_shared<const Algebra>(std::move(o));
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (c(i, j, k) != c(j, i, k)) return false;
    return true;
  }

  /// Structural equality: same field, basis labels, structure constants and unit.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.f_ == b.f_ && a.dim_ == b.dim_ && a.labels_ == b.labels_ && a.c_ == b.c_ && a.unit_ == b.unit_;
  }

  explicit Algebra(PrimeField f) : f_(f) {}

 private:
  void finish(Options opts);
  void compute_generators();
  Subspace closure(std::vector<Vec> span) const;

  PrimeField f_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  Vec c_;
  Vec unit_;
  std::optional<QuiverPresentation> quiver_;
  std::vector<Path> basis_paths_;
  std::optional<std::vector<Vec>> radical_;
  std::optional<std::vector<Vec>> idempotents_;
  std::vector<std::size_t> generators_;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

/// Smallest subalgebra containing `span` and the unit.
inline Subspace Algebra::closure(std::vector<Vec> span) const {
  span.push_back(unit_);
  Subspace s = Subspace::span(f_, dim_, span);
  while (true) {
    std::vector<Vec> vs = s.vectors();
    std::vector<Vec> all = vs;
    for (const auto& x : vs)
      for (const auto& y : vs) all.push_back(multiply(x, y));
    Subspace next = Subspace::span(f_, dim_, all);
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

inline void Algebra::compute_generators() {
  generators_.clear();
  std::vector<Vec> chosen;
  Subspace sub = closure({});
  for (std::size_t i = 0; i < dim_ && sub.dim() < dim_; ++i) {
    if (sub.contains(basis_element(i))) continue;
    generators_.push_back(i);
    chosen.push_back(basis_element(i));
    sub = closure(chosen);
  }
}

inline void Algebra::finish(Options opts) {
  const std::size_t d = dim_;
  const std::uint32_t p = f_.prime();
  auto name = [&](std::size_t i) { return labels_[i]; };

  // associativity on all basis triples
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs(d, 0), rhs(d, 0);
        for (std::size_t l = 0; l < d; ++l) {
          const std::uint32_t a = c(i, j, l), b = c(j, k, l);
          for (std::size_t m = 0; m < d; ++m) {
            if (a) lhs[m] = (lhs[m] + a * c(l, k, m)) % p;
            if (b) rhs[m] = (rhs[m] + b * c(i, l, m)) % p;
          }
        }
        if (lhs != rhs)
          throw AlgebraError("multiplication is not associative on (" + name(i) + ", " + name(j) + ", " +
                             name(k) + ")");
      }

  if (opts.unit) {
    if (opts.unit->size() != d) throw AlgebraError("unit has wrong length");
    unit_ = *opts.unit;
    for (auto& x : unit_) x %= p;
  } else {
    // solve u b_j = b_j and b_j u = b_j for all j
    Matrix sys(f_, 2 * d * d, d);
    Vec rhs(2 * d * d, 0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
          sys(j * d + k, i) = c(i, j, k);
          sys(d * d + j * d + k, i) = c(j, i, k);
        }
        rhs[j * d + k] = rhs[d * d + j * d + k] = (j == k);
      }
    auto u = solve(sys, rhs);
    if (!u) throw AlgebraError("algebra has no two-sided unit");
    unit_ = *u;
  }
  for (std::size_t j = 0; j < d; ++j) {
    const Vec bj = basis_element(j);
    if (multiply(unit_, bj) != bj || multiply(bj, unit_) != bj)
      throw AlgebraError("unit is not a two-sided identity on " + name(j));
  }

  if (opts.idempotents && !opts.radical) throw AlgebraError("idempotents require a radical basis");
  if (opts.radical) {
    Subspace rad = Subspace::span(f_, d, *opts.radical);
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& r : rad.vectors())
        if (!rad.contains(multiply(basis_element(i), r)) || !rad.contains(multiply(r, basis_element(i))))
          throw AlgebraError("radical basis does not span a two-sided ideal");
    // nilpotency: J^k = 0 for some k <= dim
    Subspace power = rad;
    for (std::size_t step = 0; step <= d && power.dim() > 0; ++step) {
      std::vector<Vec> prods;
      for (const auto& x : rad.vectors())
        for (const auto& y : power.vectors()) prods.push_back(multiply(x, y));
      power = Subspace::span(f_, d, prods);
    }
    if (power.dim() > 0) throw AlgebraError("radical basis is not nilpotent");

    std::vector<Vec> idem;
    if (opts.idempotents) {
      idem = *opts.idempotents;
    } else if (d - rad.dim() == 1) {
      idem = {unit_};
    } else {
      throw AlgebraError("a radical with quotient of dimension > 1 needs explicit primitive idempotents");
    }
    // split basic: R/J = span of the idempotent classes, so it is semisimple
    if (idem.size() != d - rad.dim())
      throw AlgebraError("number of idempotents must equal dim(R/J)");
    Vec sum(d, 0);
    for (std::size_t a = 0; a < idem.size(); ++a) {
      if (idem[a].size() != d) throw AlgebraError("idempotent has wrong length");
      for (std::size_t b = 0; b < idem.size(); ++b) {
        const Vec prod = multiply(idem[a], idem[b]);
        if ((a == b && prod != idem[a]) || (a != b && !is_zero(prod)))
          throw AlgebraError("idempotents are not pairwise orthogonal idempotents");
      }
      for (std::size_t k = 0; k < d; ++k) sum[k] = f_.add(sum[k], idem[a][k]);
    }
    if (sum != unit_) throw AlgebraError("idempotents do not sum to the unit");
    std::vector<Vec> spanning = rad.vectors();
    spanning.insert(spanning.end(), idem.begin(), idem.end());
    if (Subspace::span(f_, d, spanning).dim() != d)
      throw AlgebraError("idempotents and radical do not span the algebra");
    radical_ = rad.vectors();
    idempotents_ = std::move(idem);
  }
  compute_generators();
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Path> enumerate_paths(const QuiverPresentation& q, std::size_t max_len, std::size_t max_paths) {
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = paths.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[i].target) continue;
        Path np{paths[i].source, q.arrows[a].target, {a}};
        np.arrows.insert(np.arrows.end(), paths[i].arrows.begin(), paths[i].arrows.end());
        paths.push_back(std::move(np));
        if (paths.size() > max_paths)
          throw AlgebraError("path basis exceeds " + std::to_string(max_paths) +
                             " paths; relations do not bound the path length");
      }
    }
    layer_begin = layer_end;
  }
  return paths;
}

}  // namespace detail

inline AlgebraPtr Algebra::from_quiver(PrimeField f, const QuiverPresentation& q, std::size_t max_path_length,
                                       std::size_t max_paths) {
  if (q.vertices == 0) throw AlgebraError("quiver needs at least one vertex");
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices || a.target >= q.vertices)
      throw AlgebraError("arrow " + a.name + " has an endpoint outside the vertex range");

  std::size_t min_len = 1;
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    const auto& rel = q.relations[r];
    if (rel.empty()) throw AlgebraError("relation " + std::to_string(r + 1) + " is empty");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& t : rel) {
      if (t.arrows.size() < 2)
        throw AlgebraError("relation " + std::to_string(r + 1) + " is not admissible: a term has length < 2");
      for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
        if (t.arrows[k] >= q.arrows.size() || t.arrows[k + 1] >= q.arrows.size() ||
            q.arrows[t.arrows[k]].source != q.arrows[t.arrows[k + 1]].target)
          throw AlgebraError("relation " + std::to_string(r + 1) + " contains a non-composable path");
      if (t.arrows.back() >= q.arrows.size()) throw AlgebraError("unknown arrow in relation");
      std::pair<std::size_t, std::size_t> e{q.arrows[t.arrows.back()].source, q.arrows[t.arrows.front()].target};
      if (ends && *ends != e)
        throw AlgebraError("relation " + std::to_string(r + 1) + " is not a combination of parallel paths");
      ends = e;
      min_len = std::max(min_len, t.arrows.size());
    }
  }

  // Work in kQ / (I + J^{N+1}) for growing N until every path of length N
  // vanishes there; with I admissible this quotient is kQ / I.
  for (std::size_t N = min_len; N <= max_path_length; ++N) {
    const std::vector<Path> paths = detail::enumerate_paths(q, N, max_paths);
    // columns ordered longest path first so that pivots land on long paths
    std::vector<std::size_t> order(paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return paths[a].length() > paths[b].length(); });
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> column;
    for (std::size_t c = 0; c < order.size(); ++c)
      column[{paths[order[c]].source, paths[order[c]].arrows}] = c;
    const std::size_t P = paths.size();

    auto compose = [&](const Path& outer, const Path& inner) -> std::optional<Path> {
      if (inner.target != outer.source) return std::nullopt;
      Path r{inner.source, outer.target, outer.arrows};
      r.arrows.insert(r.arrows.end(), inner.arrows.begin(), inner.arrows.end());
      return r;
    };

    std::vector<Vec> ideal;
    for (const auto& rel : q.relations) {
      const std::size_t rs = q.arrows[rel.front().arrows.back()].source;
      const std::size_t rt = q.arrows[rel.front().arrows.front()].target;
      for (const auto& u : paths) {
        if (u.source != rt) continue;
        for (const auto& v : paths) {
          if (v.target != rs) continue;
          if (u.length() + v.length() + 2 > N) continue;
          Vec vec(P, 0);
          bool any = false;
          for (const auto& t : rel) {
            Path mid{rs, rt, t.arrows};
            Path full = *compose(u, *compose(mid, v));
            if (full.length() > N) continue;
            const std::size_t col = column.at({full.source, full.arrows});
            vec[col] = f.add(vec[col], f.reduce(t.coeff));
            any = true;
          }
          if (any) ideal.push_back(std::move(vec));
        }
      }
    }
    const Subspace rel_space = Subspace::span(f, P, ideal);

    bool truncation_ok = true;
    for (const auto& pth : paths)
      if (pth.length() == N && !rel_space.contains(unit_vec(P, column.at({pth.source, pth.arrows})))) {
        truncation_ok = false;
        break;
      }
    if (!truncation_ok) continue;

    std::vector<bool> pivot(P, false);
    for (auto c : rel_space.pivots()) pivot[c] = true;
    std::vector<std::size_t> basis_cols;  // shortest paths first
    for (std::size_t c = 0; c < P; ++c)
      if (!pivot[c]) basis_cols.push_back(c);
    std::sort(basis_cols.begin(), basis_cols.end(), [&](std::size_t x, std::size_t y) {
      return std::pair(paths[order[x]].length(), order[x]) < std::pair(paths[order[y]].length(), order[y]);
    });
    const std::size_t d = basis_cols.size();
    std::vector<std::size_t> col_to_basis(P, d);
    for (std::size_t b = 0; b < d; ++b) col_to_basis[basis_cols[b]] = b;

    std::vector<Path> bpaths;
    std::vector<std::string> labels;
    for (auto c : basis_cols) {
      const Path& pth = paths[order[c]];
      bpaths.push_back(pth);
      std::string label;
      if (pth.arrows.empty()) {
        label = "e" + std::to_string(pth.source + 1);
      } else {
        for (std::size_t k = 0; k < pth.arrows.size(); ++k) label += (k ? "_" : "") + q.arrows[pth.arrows[k]].name;
      }
      labels.push_back(label);
    }
    // disambiguate colliding labels
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) labels[j] += "_" + std::to_string(j);

    std::vector<long long> c(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto prod = compose(bpaths[i], bpaths[j]);
        if (!prod || prod->length() > N) continue;
        const Vec red = rel_space.reduce(unit_vec(P, column.at({prod->source, prod->arrows})));
        for (std::size_t col = 0; col < P; ++col)
          if (red[col]) c[(i * d + j) * d + col_to_basis[col]] = red[col];
      }

    Options opts;
    Vec unit(d, 0);
    std::vector<Vec> idem, rad;
    for (std::size_t b = 0; b < d; ++b) {
      if (bpaths[b].arrows.empty()) {
        unit[b] = 1;
        idem.push_back(unit_vec(d, b));
      } else {
        rad.push_back(unit_vec(d, b));
      }
    }
    // vertex order for idempotents
    std::sort(idem.begin(), idem.end(), [&](const Vec& x, const Vec& y) {
      auto ix = std::find(x.begin(), x.end(), 1u) - x.begin();
      auto iy = std::find(y.begin(), y.end(), 1u) - y.begin();
      return bpaths[ix].source < bpaths[iy].source;
    });
    opts.unit = unit;
    opts.radical = rad;
    opts.idempotents = idem;

    AlgebraPtr base = from_structconst(f, labels, c, opts);
    Algebra a(*base);
    a.quiver_ = q;
    a.basis_paths_ = std::move(bpaths);
    return std::make_shared<const Algebra>(std::move(a));
  }
  throw AlgebraError("arrow ideal is not nilpotent modulo the relations up to path length " +
                     std::to_string(max_path_length) + " (infinite path basis or non-admissible relations)");
}

// ---------------------------------------------------------------------------
// Named small algebras used throughout the tests and the instance generator.

namespace algebras {

/// K itself, one basis element "e".
inline AlgebraPtr field(PrimeField f) { return Algebra::from_structconst(f, {"e"}, {1}); }

/// K[x]/(x^n), basis 1, x, ..., x^{n-1}; labels "e", "x", "x2", ... (or eps for n = 2).
inline AlgebraPtr truncated_polynomial(PrimeField f, std::size_t n, const std::string& var = "x") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? var : var + std::to_string(i));
  std::vector<long long> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[(i * n + j) * n + i + j] = 1;
  std::vector<Vec> rad;
  for (std::size_t i = 1; i < n; ++i) rad.push_back(unit_vec(n, i));
  Algebra::Options opts;
  opts.radical = rad;
  return Algebra::from_structconst(f, labels, c, opts);
}

/// Dual numbers K[eps]/(eps^2).
inline AlgebraPtr dual_numbers(PrimeField f) { return truncated_polynomial(f, 2, "eps"); }

/// K[x]/(x^2 - a x - b): a commutative monogenic quotient of dimension 2.
inline AlgebraPtr monogenic2(PrimeField f, long long a, long long b) {
  // basis e, x; x*x = b e + a x
  std::vector<long long> c = {1, 0, 0, 1, 0, 1, b, a};
  return Algebra::from_structconst(f, {"e", "x"}, c);
}

/// GF(p^2) as K[w]/(w^2 - w - 1) for p = 2 (w^2 = 1 + w), else with a non-residue.
inline AlgebraPtr quadratic_extension(PrimeField f) {
  const std::uint32_t p = f.prime();
  if (p == 2) return monogenic2(f, 1, 1);
  for (std::uint32_t n = 2; n < p; ++n) {
    bool square = false;
    for (std::uint32_t s = 1; s < p && !square; ++s) square = f.mul(s, s) == n;
    if (!square) return monogenic2(f, 0, n);
  }
  throw AlgebraError("no quadratic non-residue");
}

/// K[x,y]/(x,y)^2, local of dimension 3.
inline AlgebraPtr square_zero_plane(PrimeField f) {
  const std::size_t n = 3;
  std::vector<long long> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    c[(0 * n + i) * n + i] = 1;
    c[(i * n + 0) * n + i] = 1;
  }
  Algebra::Options opts;
  opts.radical = std::vector<Vec>{unit_vec(3, 1), unit_vec(3, 2)};
  return Algebra::from_structconst(f, {"e", "x", "y"}, c, opts);
}

/// Linearly oriented A_n: 1 -> 2 -> ... -> n, arrows a1..a_{n-1}.
/// With `zero_relations`, every composite of two consecutive arrows is zero.
inline AlgebraPtr linear_quiver(PrimeField f, std::size_t n, bool zero_relations = false) {
  QuiverPresentation q;
  q.vertices = n;
  for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  if (zero_relations)
    for (std::size_t i = 0; i + 2 < n; ++i) q.relations.push_back({PathTerm{1, {i + 1, i}}});
  return Algebra::from_quiver(f, q);
}

/// A_3 with orientation 1 -> 2 <- 3.
inline AlgebraPtr a3_sink(PrimeField f) {
  QuiverPresentation q;
  q.vertices = 3;
  q.arrows = {{"a", 0, 1}, {"b", 2, 1}};
  return Algebra::from_quiver(f, q);
}

}  // namespace algebras

}  // namespace ppfun
