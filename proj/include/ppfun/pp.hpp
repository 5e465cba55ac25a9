#pragma once

/**
 * @file pp.hpp
 * @brief pp formulas in matrix normal form: parsing, solution sets, free
 *        realizations, implication, pp pairs and the duality D.
 *
 * A left formula with matrices A (l x n) and B (l x m) reads
 * E y. A x = B y, row by row sum_j A_rj x_j = sum_k B_rk y_k. A right
 * formula stores the same shapes and reads sum_j x_j A_rj = sum_k y_k B_rk.
 */

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppfun/algebra.hpp"
#include "ppfun/errors.hpp"
#include "ppfun/exactlin.hpp"
#include "ppfun/module.hpp"

namespace ppfun {

/// A rows x cols matrix whose entries are algebra elements.
struct AlgMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Vec> entries;  // row-major, each of length alg.dim

  AlgMatrix() = default;
  AlgMatrix(const Algebra& a, std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, a.zero()) {}

  Vec& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Vec& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  friend bool operator==(const AlgMatrix&, const AlgMatrix&) = default;
};

class PpFormula {
 public:
  PpFormula() = default;
  PpFormula(AlgebraPtr alg, Side side, std::size_t n, std::size_t m, AlgMatrix a, AlgMatrix b)
      : alg_(std::move(alg)), side_(side), n_(n), m_(m), a_(std::move(a)), b_(std::move(b)) {
    if (a_.cols != n_ || b_.cols != m_ || a_.rows != b_.rows) throw DimensionMismatch("pp formula matrix shapes");
    for (const auto* mat : {&a_, &b_})
      for (const auto& e : mat->entries)
        if (e.size() != alg_->dim()) throw DimensionMismatch("pp formula entry length");
  }

  /// x1 = x1 & ... : no rows, no bound variables.
  static PpFormula tautology(AlgebraPtr alg, Side side, std::size_t n) {
    const Algebra& a = *alg;
    return {std::move(alg), side, n, 0, AlgMatrix(a, 0, n), AlgMatrix(a, 0, 0)};
  }
  /// x = 0: A = identity, no bound variables.
  static PpFormula zero(AlgebraPtr alg, Side side, std::size_t n) {
    const Algebra& a = *alg;
    AlgMatrix id(a, n, n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = a.unit();
    return {std::move(alg), side, n, 0, std::move(id), AlgMatrix(a, n, 0)};
  }

  const AlgebraPtr& algebra() const { return alg_; }
  Side side() const { return side_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t l() const { return a_.rows; }
  const AlgMatrix& A() const { return a_; }
  const AlgMatrix& B() const { return b_; }

  friend bool operator==(const PpFormula& x, const PpFormula& y) {
    return same_algebra(x.alg_, y.alg_) && x.side_ == y.side_ && x.n_ == y.n_ && x.m_ == y.m_ && x.a_ == y.a_ &&
           x.b_ == y.b_;
  }

 private:
  AlgebraPtr alg_;
  Side side_ = Side::left;
  std::size_t n_ = 0, m_ = 0;
  AlgMatrix a_, b_;
};

inline void require_formula_module(const PpFormula& phi, const Module& m) {
  if (phi.side() != m.side()) throw Mismatch("formula and module live on different sides");
  if (!same_algebra(phi.algebra(), m.algebra())) throw Mismatch("formula and module over different algebras");
}

inline void require_same_shape(const PpFormula& a, const PpFormula& b) {
  if (a.side() != b.side()) throw Mismatch("formulas live on different sides");
  if (!same_algebra(a.algebra(), b.algebra())) throw Mismatch("formulas over different algebras");
  if (a.n() != b.n())
    throw DimensionMismatch("variable arity mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

/// Drops rows in which every coefficient vanishes.
inline PpFormula drop_zero_rows(const PpFormula& phi) {
  const Algebra& alg = *phi.algebra();
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < phi.l(); ++r) {
    bool zero = true;
    for (std::size_t j = 0; j < phi.n() && zero; ++j) zero = is_zero(phi.A().at(r, j));
    for (std::size_t k = 0; k < phi.m() && zero; ++k) zero = is_zero(phi.B().at(r, k));
    if (!zero) keep.push_back(r);
  }
  AlgMatrix a(alg, keep.size(), phi.n()), b(alg, keep.size(), phi.m());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < phi.n(); ++j) a.at(i, j) = phi.A().at(keep[i], j);
    for (std::size_t k = 0; k < phi.m(); ++k) b.at(i, k) = phi.B().at(keep[i], k);
  }
  return {phi.algebra(), phi.side(), phi.n(), phi.m(), std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// Solution sets

/// The block matrix [rho(A) | -rho(B)] acting on M^{n+m}.
inline Matrix system_matrix(const PpFormula& phi, const Module& m) {
  require_formula_module(phi, m);
  const std::size_t d = m.dim();
  const PrimeField& f = m.field();
  Matrix sys(f, phi.l() * d, (phi.n() + phi.m()) * d);
  for (std::size_t r = 0; r < phi.l(); ++r) {
    for (std::size_t j = 0; j < phi.n(); ++j)
      if (!is_zero(phi.A().at(r, j))) sys.set_block(r * d, j * d, m.act(phi.A().at(r, j)));
    for (std::size_t k = 0; k < phi.m(); ++k)
      if (!is_zero(phi.B().at(r, k)))
        sys.set_block(r * d, (phi.n() + k) * d, m.act(phi.B().at(r, k)).scaled(f.neg(1)));
  }
  return sys;
}

/// phi(M) as a subspace of M^n, coordinates x_1 | ... | x_n.
inline Subspace solution_set(const PpFormula& phi, const Module& m) {
  const Matrix sys = system_matrix(phi, m);
  const std::size_t nx = phi.n() * m.dim();
  if (phi.l() == 0 || m.dim() == 0) return Subspace::whole(m.field(), nx);
  const Subspace ker = kernel(sys);
  std::vector<Vec> proj;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    const Vec v = ker.vector(i);
    proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nx));
  }
  return Subspace::span(m.field(), nx, proj);
}

/// Image of a tuple under a module map, componentwise.
inline Vec map_tuple(const ModuleMap& f, const Vec& tuple) {
  const std::size_t ds = f.source().dim();
  const std::size_t n = ds == 0 ? 0 : tuple.size() / ds;
  Vec out;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec x(tuple.begin() + static_cast<std::ptrdiff_t>(j * ds), tuple.begin() + static_cast<std::ptrdiff_t>((j + 1) * ds));
    const Vec y = f(x);
    out.insert(out.end(), y.begin(), y.end());
  }
  return out;
}

/// Matrix of f^n : M^n -> N^n.
inline Matrix map_power(const ModuleMap& f, std::size_t n) {
  return Matrix::block_diagonal(std::vector<Matrix>(n, f.matrix()));
}

// ---------------------------------------------------------------------------
// Free realizations

/**
 * C_phi = R^{n+m} / <rows of [A | -B]> with tuple = classes of the first n
 * free generators. Hom(C_phi, M) -> M^n, h -> h(tuple), has image phi(M).
 */
struct FreeRealization {
  Module module;
  Vec tuple;              ///< concatenated n elements of C_phi
  Module free;            ///< R^{n+m}
  ModuleMap projection;   ///< R^{n+m} -> C_phi
};

inline FreeRealization free_realization(const PpFormula& phi) {
  const AlgebraPtr& alg = phi.algebra();
  const std::size_t d = alg->dim(), n = phi.n(), m = phi.m();
  const Module free = free_module(alg, phi.side(), n + m);
  const PrimeField& f = alg->field();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < phi.l(); ++r) {
    Vec v((n + m) * d, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < d; ++i) v[j * d + i] = phi.A().at(r, j)[i];
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < d; ++i) v[(n + k) * d + i] = f.neg(phi.B().at(r, k)[i]);
    rows.push_back(std::move(v));
  }
  QuotientResult q = quotient_module(free, generated_subspace(free, rows));
  Vec tuple;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec t = q.projection(free_element(alg, n + m, j, alg->unit()));
    tuple.insert(tuple.end(), t.begin(), t.end());
  }
  return {q.module, std::move(tuple), free, q.projection};
}

/// Evaluation Hom(C_phi, M) -> M^n as a matrix on flattened Hom coordinates of the given space.
inline Matrix evaluation_matrix(const HomSpace& hom, const Vec& tuple, std::size_t n) {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < hom.dim(); ++k) cols.push_back(map_tuple(hom.map(k), tuple));
  return Matrix::from_columns(hom.target().field(), n * hom.target().dim(), cols);
}

/// phi(M) computed as the image of Hom(C_phi, M) -> M^n.
inline Subspace realized_solution_set(const FreeRealization& fr, std::size_t n, const Module& m) {
  const HomSpace hom = hom_space(fr.module, m);
  std::vector<Vec> imgs;
  for (std::size_t k = 0; k < hom.dim(); ++k) imgs.push_back(map_tuple(hom.map(k), fr.tuple));
  return Subspace::span(m.field(), n * m.dim(), imgs);
}

/// phi(M) ⊆ psi(M) for every module M, decided on the free realization of phi.
inline bool implies(const PpFormula& phi, const PpFormula& psi) {
  require_same_shape(phi, psi);
  const FreeRealization fr = free_realization(phi);
  return solution_set(psi, fr.module).contains(fr.tuple);
}

// ---------------------------------------------------------------------------
// Duality

/**
 * D phi on the opposite side: E y. x = y A & y B = 0 for a left formula
 * (mirrored for a right one). Result: n free, l bound variables, rows
 * A' = [I_n; 0], B' = [A^T; B^T].
 */
inline PpFormula dual_formula(const PpFormula& phi) {
  const Algebra& alg = *phi.algebra();
  const std::size_t n = phi.n(), m = phi.m(), l = phi.l();
  AlgMatrix a(alg, n + m, n), b(alg, n + m, l);
  for (std::size_t j = 0; j < n; ++j) {
    a.at(j, j) = alg.unit();
    for (std::size_t r = 0; r < l; ++r) b.at(j, r) = phi.A().at(r, j);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t r = 0; r < l; ++r) b.at(n + k, r) = phi.B().at(r, k);
  return {phi.algebra(), opposite(phi.side()), n, l, std::move(a), std::move(b)};
}

/// Nonzero scalar c if x = c * unit, else nullopt.
inline std::optional<std::uint32_t> scalar_of(const Algebra& alg, const Vec& x) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (alg.unit()[i]) {
      const std::uint32_t c = alg.field().mul(x[i], alg.field().inv(alg.unit()[i]));
      if (c == 0) return std::nullopt;
      Vec cu = alg.unit();
      for (auto& v : cu) v = alg.field().mul(v, c);
      return cu == x ? std::optional<std::uint32_t>(c) : std::nullopt;
    }
  return std::nullopt;
}

/**
 * An equivalent formula with fewer bound variables: a bound variable whose
 * coefficient in some row is a nonzero scalar is solved for and eliminated,
 * zero rows are dropped, and unused bound variables removed.
 */
inline PpFormula simplify(const PpFormula& phi) {
  const Algebra& alg = *phi.algebra();
  const PrimeField& f = alg.field();
  const bool left = phi.side() == Side::left;
  // product in the order the ring elements act: left acts c*(a*x), i.e. c·a; right (x a) c, i.e. a·c
  auto compose = [&](const Vec& outer, const Vec& inner) {
    return left ? alg.multiply(outer, inner) : alg.multiply(inner, outer);
  };
  std::vector<std::vector<Vec>> a(phi.l()), b(phi.l());
  for (std::size_t r = 0; r < phi.l(); ++r) {
    for (std::size_t j = 0; j < phi.n(); ++j) a[r].push_back(phi.A().at(r, j));
    for (std::size_t k = 0; k < phi.m(); ++k) b[r].push_back(phi.B().at(r, k));
  }
  std::vector<bool> alive(phi.m(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < a.size() && !changed; ++r)
      for (std::size_t k = 0; k < phi.m() && !changed; ++k) {
        if (!alive[k]) continue;
        const auto c = scalar_of(alg, b[r][k]);
        if (!c) continue;
        // y_k = c^{-1} (A_r x - sum_{k' != k} B_rk' y_k')
        const std::uint32_t ci = f.inv(*c);
        for (std::size_t s = 0; s < a.size(); ++s) {
          if (s == r || is_zero(b[s][k])) continue;
          Vec coef = b[s][k];
          for (auto& v : coef) v = f.mul(v, ci);
          for (std::size_t j = 0; j < phi.n(); ++j) a[s][j] = vsub(f, a[s][j], compose(coef, a[r][j]));
          for (std::size_t k2 = 0; k2 < phi.m(); ++k2)
            if (k2 != k) b[s][k2] = vsub(f, b[s][k2], compose(coef, b[r][k2]));
          b[s][k] = alg.zero();
        }
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(r));
        alive[k] = false;
        changed = true;
      }
  }
  // bound variables that no longer occur in any row are unconstrained
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < phi.m(); ++k) {
    if (!alive[k]) continue;
    bool used = false;
    for (const auto& row : b) used = used || !is_zero(row[k]);
    if (used) kept.push_back(k);
  }
  AlgMatrix am(alg, a.size(), phi.n()), bm(alg, a.size(), kept.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t j = 0; j < phi.n(); ++j) am.at(r, j) = a[r][j];
    for (std::size_t i = 0; i < kept.size(); ++i) bm.at(r, i) = b[r][kept[i]];
  }
  return drop_zero_rows(PpFormula(phi.algebra(), phi.side(), phi.n(), kept.size(), std::move(am), std::move(bm)));
}

/// phi & psi with disjoint bound variables.
inline PpFormula conjunction(const PpFormula& phi, const PpFormula& psi) {
  require_same_shape(phi, psi);
  const Algebra& alg = *phi.algebra();
  const std::size_t l = phi.l() + psi.l(), m = phi.m() + psi.m();
  AlgMatrix a(alg, l, phi.n()), b(alg, l, m);
  for (std::size_t r = 0; r < phi.l(); ++r) {
    for (std::size_t j = 0; j < phi.n(); ++j) a.at(r, j) = phi.A().at(r, j);
    for (std::size_t k = 0; k < phi.m(); ++k) b.at(r, k) = phi.B().at(r, k);
  }
  for (std::size_t r = 0; r < psi.l(); ++r) {
    for (std::size_t j = 0; j < psi.n(); ++j) a.at(phi.l() + r, j) = psi.A().at(r, j);
    for (std::size_t k = 0; k < psi.m(); ++k) b.at(phi.l() + r, phi.m() + k) = psi.B().at(r, k);
  }
  return {phi.algebra(), phi.side(), phi.n(), m, std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// pp pairs

/// phi / psi with psi ≤ phi certified by implies(psi, phi).
class PpPair {
 public:
  const PpFormula& phi() const { return phi_; }
  const PpFormula& psi() const { return psi_; }
  /// The free-realization tuple of psi, which lies in phi(C_psi).
  const Vec& certificate() const { return cert_; }

  friend PpPair make_pair(const PpFormula& phi, const PpFormula& psi);

 private:
  PpFormula phi_, psi_;
  Vec cert_;
};

inline PpPair make_pair(const PpFormula& phi, const PpFormula& psi) {
  require_same_shape(phi, psi);
  const FreeRealization fr = free_realization(psi);
  if (!solution_set(phi, fr.module).contains(fr.tuple)) {
    std::string t;
    for (auto v : fr.tuple) t += std::to_string(v);
    throw NotAPair("psi does not imply phi: the free realization of psi (dim " + std::to_string(fr.module.dim()) +
                   ") has tuple [" + t + "] outside phi");
  }
  PpPair p;
  p.phi_ = phi;
  p.psi_ = psi;
  p.cert_ = fr.tuple;
  return p;
}

// ---------------------------------------------------------------------------
// DSL

namespace detail {

class PpParser {
 public:
  PpParser(const std::string& text, const Algebra& alg, Side side) : s_(text), alg_(alg), side_(side) {}

  struct Term {
    bool is_x;
    std::size_t index;  // 1-based
    Vec coeff;
  };
  struct Row {
    std::vector<Term> terms;  // lhs - rhs
  };

  std::vector<Row> rows;
  std::size_t declared_y = 0;
  std::size_t max_x = 0;

  void parse() {
    skip();
    if (peek_word() == "E") {
      pos_ += 1;
      skip();
      std::vector<std::size_t> ys;
      while (pos_ < s_.size() && s_[pos_] != '.') {
        const std::size_t at = pos_;
        auto [kind, idx] = variable();
        if (kind != 'y') throw ParseError("only y variables may be quantified", at);
        if (std::find(ys.begin(), ys.end(), idx) != ys.end()) throw ParseError("y" + std::to_string(idx) + " quantified twice", at);
        ys.push_back(idx);
        declared_y = std::max(declared_y, idx);
        skip();
      }
      if (pos_ >= s_.size()) throw ParseError("expected '.' after quantified variables", pos_);
      ++pos_;
      for (std::size_t i = 1; i <= declared_y; ++i)
        if (std::find(ys.begin(), ys.end(), i) == ys.end())
          throw ParseError("bound variables must be y1..ym without gaps; y" + std::to_string(i) + " missing", pos_);
    }
    equation();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '&') {
      ++pos_;
      equation();
      skip();
    }
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string peek_word() const {
    std::size_t e = pos_;
    while (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) ++e;
    return s_.substr(pos_, e - pos_);
  }
  std::string word() {
    const std::string w = peek_word();
    if (w.empty()) throw ParseError("expected a name or number", pos_);
    pos_ += w.size();
    return w;
  }
  static bool is_var(const std::string& w) {
    if (w.size() < 2 || (w[0] != 'x' && w[0] != 'y')) return false;
    return std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
           w[1] != '0';
  }
  std::pair<char, std::size_t> variable() {
    const std::size_t at = pos_;
    const std::string w = word();
    if (!is_var(w)) throw ParseError("expected a variable x<k> or y<k>, got '" + w + "'", at);
    return {w[0], std::stoul(w.substr(1))};
  }

  void equation() {
    Row row;
    lin(row, false);
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '=') throw ParseError("expected '='", pos_);
    ++pos_;
    lin(row, true);
    rows.push_back(std::move(row));
  }

  void lin(Row& row, bool negate) {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    if (peek_word() == "0") {
      const std::size_t save = pos_;
      pos_ += 1;
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '*') return;
      pos_ = save;
    }
    for (;;) {
      term(row, negate != neg);
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        neg = s_[pos_] == '-';
        ++pos_;
      } else {
        return;
      }
    }
  }

  void term(Row& row, bool negative) {
    skip();
    std::vector<std::pair<std::string, std::size_t>> factors;
    factors.emplace_back(std::string(), pos_);
    factors.back().first = word();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      factors.emplace_back(word(), at);
      skip();
    }
    const PrimeField& f = alg_.field();
    // the variable is the last factor on the left side and the first non-scalar factor on the right side
    std::size_t var_pos;
    if (side_ == Side::left) {
      var_pos = factors.size() - 1;
    } else {
      var_pos = 0;
      while (var_pos < factors.size() && is_number(factors[var_pos].first)) ++var_pos;
      if (var_pos == factors.size()) var_pos = factors.size() - 1;
    }
    const auto& [vname, vat] = factors[var_pos];
    if (!is_var(vname)) {
      if (side_ == Side::right && !is_number(vname) && factors.size() > 1 && is_var(factors.back().first))
        throw ParseError("right formulas take coefficients after the variable (x1*" + vname + ")", vat);
      throw ParseError("expected a variable, got '" + vname + "'", vat);
    }
    Vec coeff = alg_.unit();
    std::uint32_t scalar = negative ? f.neg(1) : 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i == var_pos) continue;
      const auto& [w, at] = factors[i];
      if (is_number(w)) {
        if ((side_ == Side::left && i > var_pos) || (side_ == Side::right && i > var_pos))
          throw ParseError("scalars must precede the term", at);
        scalar = f.mul(scalar, f.reduce(std::stoll(w)));
        continue;
      }
      if (side_ == Side::left && i > var_pos) throw ParseError("coefficients follow the variable only in right formulas", at);
      if (side_ == Side::right && i < var_pos)
        throw ParseError("right formulas take coefficients after the variable (x1*" + w + ")", at);
      const auto idx = alg_.label_index(w);
      if (!idx) throw ParseError("unknown algebra basis symbol '" + w + "'", at);
      // left: outer factors come first; right: later factors act last
      coeff = alg_.multiply(coeff, alg_.basis_element(*idx));
    }
    for (auto& c : coeff) c = f.mul(c, scalar);
    const char kind = vname[0];
    const std::size_t index = std::stoul(vname.substr(1));
    if (kind == 'y' && index > declared_y)
      throw ParseError("variable arity mismatch: y" + std::to_string(index) + " is not quantified", vat);
    if (kind == 'x') max_x = std::max(max_x, index);
    row.terms.push_back({kind == 'x', index, std::move(coeff)});
  }

  static bool is_number(const std::string& w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  const std::string& s_;
  const Algebra& alg_;
  Side side_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/**
 * Parses the pp DSL. n is the largest x index used, or `arity` when given
 * (an index above `arity` is an error). Zero rows are dropped.
 */
inline PpFormula parse_pp(const std::string& text, const AlgebraPtr& alg, Side side,
                          std::optional<std::size_t> arity = std::nullopt) {
  detail::PpParser p(text, *alg, side);
  p.parse();
  if (arity && p.max_x > *arity)
    throw ParseError("variable arity mismatch: x" + std::to_string(p.max_x) + " used but arity is " + std::to_string(*arity),
                     0);
  const std::size_t n = arity ? *arity : p.max_x;
  const std::size_t m = p.declared_y;
  const PrimeField& f = alg->field();
  AlgMatrix a(*alg, p.rows.size(), n), b(*alg, p.rows.size(), m);
  for (std::size_t r = 0; r < p.rows.size(); ++r)
    for (const auto& t : p.rows[r].terms) {
      if (t.is_x) {
        Vec& e = a.at(r, t.index - 1);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.add(e[i], t.coeff[i]);
      } else {
        Vec& e = b.at(r, t.index - 1);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.sub(e[i], t.coeff[i]);
      }
    }
  return drop_zero_rows(PpFormula(alg, side, n, m, std::move(a), std::move(b)));
}

namespace detail {

inline std::string unparse_side(const Algebra& alg, Side side, const AlgMatrix& mat, std::size_t r, char var) {
  std::string out;
  for (std::size_t j = 0; j < mat.cols; ++j) {
    const Vec& e = mat.at(r, j);
    if (is_zero(e)) continue;
    const std::string v = std::string(1, var) + std::to_string(j + 1);
    // a scalar multiple of the unit prints without a basis symbol
    if (auto c = scalar_of(alg, e)) {
      if (!out.empty()) out += " + ";
      out += (*c == 1 ? "" : std::to_string(*c) + "*") + v;
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!out.empty()) out += " + ";
      const std::string sc = e[i] == 1 ? "" : std::to_string(e[i]) + "*";
      out += side == Side::left ? sc + alg.labels()[i] + "*" + v : sc + v + "*" + alg.labels()[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// DSL text that parses back (with the same side) to identical matrices for formulas without zero rows.
inline std::string unparse_pp(const PpFormula& phi) {
  const Algebra& alg = *phi.algebra();
  std::string out;
  if (phi.m() > 0) {
    out = "E";
    for (std::size_t k = 1; k <= phi.m(); ++k) out += " y" + std::to_string(k);
    out += ". ";
  }
  std::vector<std::string> eqs;
  bool uses_last = phi.n() == 0;
  for (std::size_t r = 0; r < phi.l(); ++r) {
    eqs.push_back(detail::unparse_side(alg, phi.side(), phi.A(), r, 'x') + " = " +
                  detail::unparse_side(alg, phi.side(), phi.B(), r, 'y'));
    if (phi.n() > 0 && !is_zero(phi.A().at(r, phi.n() - 1))) uses_last = true;
  }
  if (!uses_last) eqs.push_back("x" + std::to_string(phi.n()) + " = x" + std::to_string(phi.n()));
  if (eqs.empty()) eqs.push_back("0 = 0");
  for (std::size_t i = 0; i < eqs.size(); ++i) out += (i ? " & " : "") + eqs[i];
  return out;
}

}  // namespace ppfun
