#pragma once

/**
 * @file module.hpp
 * @brief Finite-dimensional modules, module maps, Hom spaces, tensor products
 *        over the algebra, and K-duals.
 *
 * A module stores one K-linear action matrix per algebra basis element. For a
 * left module the matrix of b_i is x -> b_i x; for a right module it is
 * x -> x b_i. Intertwining conditions are therefore side-independent, while
 * the multiplication axiom reads A(b_i b_j) = A_i A_j on the left and
 * A(b_i b_j) = A_j A_i on the right.
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppfun/algebra.hpp"
#include "ppfun/errors.hpp"
#include "ppfun/exactlin.hpp"

namespace ppfun {

enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

class Module {
 public:
  Module() = default;

  /// Validates the unit and multiplication axioms.
  static Module create(AlgebraPtr alg, Side side, std::size_t dim, std::vector<Matrix> action) {
    if (!alg) throw ModuleError("module needs an algebra");
    if (action.size() != alg->dim())
      throw ModuleError("expected " + std::to_string(alg->dim()) + " action matrices, got " +
                        std::to_string(action.size()));
    for (const auto& a : action)
      if (a.rows() != dim || a.cols() != dim || !(a.field() == alg->field()))
        throw ModuleError("action matrix shape must be " + std::to_string(dim) + "x" + std::to_string(dim));
    Module m = unchecked(std::move(alg), side, dim, std::move(action));
    m.validate();
    return m;
  }

  static Module unchecked(AlgebraPtr alg, Side side, std::size_t dim, std::vector<Matrix> action) {
    Module m;
    auto d = std::make_shared<Data>();
    d->alg = std::move(alg);
    d->side = side;
    d->dim = dim;
    d->action = std::move(action);
    m.d_ = std::move(d);
    return m;
  }

  static Module zero(AlgebraPtr alg, Side side) {
    std::vector<Matrix> act(alg->dim(), Matrix(alg->field(), 0, 0));
    return unchecked(std::move(alg), side, 0, std::move(act));
  }

  const AlgebraPtr& algebra() const { return d_->alg; }
  const PrimeField& field() const { return d_->alg->field(); }
  Side side() const { return d_->side; }
  std::size_t dim() const { return d_->dim; }
  const std::vector<Matrix>& action() const { return d_->action; }
  const Matrix& action(std::size_t i) const { return d_->action[i]; }

  /// Matrix by which the algebra element x acts.
  Matrix act(const Vec& x) const {
    if (x.size() != d_->alg->dim()) throw DimensionMismatch("algebra element length");
    Matrix m(field(), dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i) m.add_scaled(d_->action[i], x[i]);
    return m;
  }

  void validate() const {
    const Algebra& a = *d_->alg;
    const std::size_t n = a.dim();
    if (!(act(a.unit()) == Matrix::identity(field(), dim())))
      throw ModuleError("the unit does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec prod(n, 0);
        for (std::size_t k = 0; k < n; ++k) prod[k] = a.c(i, j, k);
        const Matrix lhs = act(prod);
        const Matrix rhs = side() == Side::left ? action(i) * action(j) : action(j) * action(i);
        if (!(lhs == rhs))
          throw ModuleError("action does not respect the product " + a.labels()[i] + "*" + a.labels()[j]);
      }
  }

  bool compatible(const Module& o) const { return side() == o.side() && same_algebra(algebra(), o.algebra()); }

 private:
  struct Data {
    AlgebraPtr alg;
    Side side = Side::left;
    std::size_t dim = 0;
    std::vector<Matrix> action;
  };
  std::shared_ptr<const Data> d_;
};

inline void require_compatible(const Module& a, const Module& b, const char* what) {
  if (a.side() != b.side()) throw Mismatch(std::string(what) + ": modules live on different sides");
  if (!same_algebra(a.algebra(), b.algebra())) throw Mismatch(std::string(what) + ": modules over different algebras");
}

/// A module homomorphism; the matrix is target.dim x source.dim.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(Module source, Module target, Matrix matrix)
      : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
    require_compatible(src_, tgt_, "module map");
    if (m_.rows() != tgt_.dim() || m_.cols() != src_.dim())
      throw DimensionMismatch("module map matrix must be target.dim x source.dim");
    for (auto g : src_.algebra()->generators())
      if (!(m_ * src_.action(g) == tgt_.action(g) * m_))
        throw ModuleError("matrix does not intertwine the action of " + src_.algebra()->labels()[g]);
  }

  static ModuleMap zero(const Module& s, const Module& t) { return {s, t, Matrix(s.field(), t.dim(), s.dim())}; }
  static ModuleMap identity(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Matrix& matrix() const { return m_; }

  Vec operator()(const Vec& x) const { return m_ * x; }

  /// this ∘ g
  ModuleMap after(const ModuleMap& g) const { return {g.source(), tgt_, m_ * g.matrix()}; }

 private:
  Module src_, tgt_;
  Matrix m_;
};

// ---------------------------------------------------------------------------
// Constructions

/// R^rank with the regular action on the given side.
inline Module free_module(const AlgebraPtr& alg, Side side, std::size_t rank) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    const Matrix blk = side == Side::left ? alg->left_mult(alg->basis_element(i)) : alg->right_mult(alg->basis_element(i));
    act.push_back(Matrix::block_diagonal(std::vector<Matrix>(rank, blk)));
    if (rank == 0) act.back() = Matrix(alg->field(), 0, 0);
  }
  return Module::unchecked(alg, side, rank * alg->dim(), std::move(act));
}

/// The element of R^rank with algebra element x in the given slot.
inline Vec free_element(const AlgebraPtr& alg, std::size_t rank, std::size_t slot, const Vec& x) {
  Vec v(rank * alg->dim(), 0);
  std::copy(x.begin(), x.end(), v.begin() + slot * alg->dim());
  return v;
}

/// K-span of R·v over all given v (R v on the left, v R on the right): the submodule they generate.
inline Subspace generated_subspace(const Module& m, const std::vector<Vec>& gens) {
  std::vector<Vec> vs;
  for (const auto& g : gens)
    for (const auto& a : m.action()) vs.push_back(a * g);
  return Subspace::span(m.field(), m.dim(), vs);
}

inline bool is_invariant(const Module& m, const Subspace& s) {
  for (auto g : m.algebra()->generators())
    for (const auto& v : s.vectors())
      if (!s.contains(m.action(g) * v)) return false;
  return true;
}

struct SubmoduleResult {
  Module module;
  ModuleMap inclusion;
};
struct QuotientResult {
  Module module;
  ModuleMap projection;
};

/// Submodule on an invariant subspace, with basis = the subspace's RREF basis.
inline SubmoduleResult submodule(const Module& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("subspace does not live in the module");
  if (!is_invariant(m, s)) throw ModuleError("subspace is not a submodule");
  const std::size_t k = s.dim();
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix sub(m.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Vec c = s.coords(a * s.vector(j));
      for (std::size_t i = 0; i < k; ++i) sub(i, j) = c[i];
    }
    act.push_back(std::move(sub));
  }
  Module sm = Module::unchecked(m.algebra(), m.side(), k, std::move(act));
  Matrix incl = s.basis().transpose();
  if (k == 0) incl = Matrix(m.field(), m.dim(), 0);
  return {sm, ModuleMap(sm, m, incl)};
}

/// M / s; coordinates are the non-pivot coordinates after reducing modulo s.
inline QuotientResult quotient_module(const Module& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("subspace does not live in the module");
  if (!is_invariant(m, s)) throw ModuleError("subspace is not a submodule");
  std::vector<bool> pivot(m.dim(), false);
  for (auto c : s.pivots()) pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!pivot[c]) free_cols.push_back(c);
  const std::size_t q = free_cols.size();
  Matrix proj(m.field(), q, m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const Vec r = s.reduce(unit_vec(m.dim(), j));
    for (std::size_t i = 0; i < q; ++i) proj(i, j) = r[free_cols[i]];
  }
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix qa(m.field(), q, q);
    for (std::size_t j = 0; j < q; ++j) {
      const Vec img = proj * (a * unit_vec(m.dim(), free_cols[j]));
      for (std::size_t i = 0; i < q; ++i) qa(i, j) = img[i];
    }
    act.push_back(std::move(qa));
  }
  Module qm = Module::unchecked(m.algebra(), m.side(), q, std::move(act));
  return {qm, ModuleMap(m, qm, proj)};
}

struct DirectSum {
  Module module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

inline DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw ModuleError("direct sum of nothing");
  for (const auto& p : parts) require_compatible(parts.front(), p, "direct sum");
  const AlgebraPtr& alg = parts.front().algebra();
  std::vector<Matrix> act;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Matrix a(alg->field(), total, total);
    std::size_t off = 0;
    for (const auto& p : parts) {
      a.set_block(off, off, p.action(i));
      off += p.dim();
    }
    act.push_back(std::move(a));
  }
  Module sum = Module::unchecked(alg, parts.front().side(), total, std::move(act));
  DirectSum ds{sum, {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix inj(alg->field(), total, p.dim());
    inj.set_block(off, 0, Matrix::identity(alg->field(), p.dim()));
    ds.injections.emplace_back(p, sum, inj);
    ds.projections.emplace_back(sum, p, inj.transpose());
    off += p.dim();
  }
  return ds;
}

inline Module direct_sum(const Module& a, const Module& b) { return direct_sum({a, b}).module; }

/// The map R^k -> target sending the i-th free generator to images[i].
inline ModuleMap map_from_free(const Module& free, std::size_t rank, const Module& target, const std::vector<Vec>& images) {
  const AlgebraPtr& alg = target.algebra();
  if (images.size() != rank) throw DimensionMismatch("one image per generator");
  const std::size_t d = alg->dim();
  Matrix m(alg->field(), target.dim(), rank * d);
  for (std::size_t g = 0; g < rank; ++g)
    for (std::size_t i = 0; i < d; ++i) {
      const Vec img = target.action(i) * images[g];
      for (std::size_t r = 0; r < target.dim(); ++r) m(r, g * d + i) = img[r];
    }
  return ModuleMap(free, target, m);
}

/// Kernel, image and cokernel of a module map, with their universal maps.
struct MapFactors {
  SubmoduleResult kernel;
  SubmoduleResult image;
  QuotientResult cokernel;
};

inline SubmoduleResult map_kernel(const ModuleMap& f) { return submodule(f.source(), kernel(f.matrix())); }
inline SubmoduleResult map_image(const ModuleMap& f) { return submodule(f.target(), column_space(f.matrix())); }
inline QuotientResult map_cokernel(const ModuleMap& f) { return quotient_module(f.target(), column_space(f.matrix())); }
inline MapFactors map_factor(const ModuleMap& f) { return {map_kernel(f), map_image(f), map_cokernel(f)}; }

/**
 * A small generating set of a module chosen greedily from the standard basis:
 * a basis vector is added when it is not in the submodule generated so far.
 */
inline std::vector<Vec> greedy_generators(const Module& m) {
  std::vector<Vec> gens;
  Subspace sub = Subspace::zero(m.field(), m.dim());
  for (std::size_t i = 0; i < m.dim() && sub.dim() < m.dim(); ++i) {
    const Vec e = unit_vec(m.dim(), i);
    if (sub.contains(e)) continue;
    gens.push_back(e);
    sub = generated_subspace(m, gens);
  }
  return gens;
}

struct FreeCover {
  Module free;
  std::size_t rank = 0;
  std::vector<Vec> generators;
  ModuleMap epi;
};

inline FreeCover free_cover(const Module& m) {
  FreeCover fc;
  fc.generators = greedy_generators(m);
  fc.rank = fc.generators.size();
  fc.free = free_module(m.algebra(), m.side(), fc.rank);
  fc.epi = map_from_free(fc.free, fc.rank, m, fc.generators);
  return fc;
}

// ---------------------------------------------------------------------------
// Hom spaces

/**
 * Hom_R(source, target) as a K-subspace of flattened target.dim x source.dim
 * matrices (row-major). The basis is canonical RREF, so coordinates of an
 * element are just its entries at the pivot positions.
 */
class HomSpace {
 public:
  HomSpace(Module source, Module target, Subspace basis)
      : src_(std::move(source)), tgt_(std::move(target)), basis_(std::move(basis)) {}

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Subspace& space() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }

  Matrix matrix_of(const Vec& flat) const {
    Matrix m(src_.field(), tgt_.dim(), src_.dim());
    for (std::size_t r = 0; r < tgt_.dim(); ++r)
      for (std::size_t c = 0; c < src_.dim(); ++c) m(r, c) = flat[r * src_.dim() + c];
    return m;
  }
  static Vec flatten(const Matrix& m) { return m.data(); }

  ModuleMap map(std::size_t k) const { return ModuleMap(src_, tgt_, matrix_of(basis_.vector(k))); }
  std::vector<ModuleMap> maps() const {
    std::vector<ModuleMap> out;
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(map(k));
    return out;
  }
  Vec coords(const Matrix& m) const { return basis_.coords(flatten(m)); }
  bool contains(const Matrix& m) const { return basis_.contains(flatten(m)); }
  Matrix element(const Vec& coords) const { return matrix_of(basis_.from_coords(coords)); }

 private:
  Module src_, tgt_;
  Subspace basis_;
};

/// Solves X A_s(g) = A_t(g) X for the algebra generators g.
inline HomSpace hom_space(const Module& m, const Module& n) {
  require_compatible(m, n, "hom_space");
  const std::size_t ds = m.dim(), dt = n.dim(), u = ds * dt;
  const PrimeField& f = m.field();
  const auto& gens = m.algebra()->generators();
  Matrix sys(f, gens.size() * u, u);
  std::size_t row = 0;
  for (auto g : gens) {
    const Matrix& as = m.action(g);
    const Matrix& at = n.action(g);
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c, ++row) {
        for (std::size_t k = 0; k < ds; ++k) {
          const std::uint32_t v = as(k, c);
          if (v) sys(row, r * ds + k) = f.add(sys(row, r * ds + k), v);
        }
        for (std::size_t k = 0; k < dt; ++k) {
          const std::uint32_t v = at(r, k);
          if (v) sys(row, k * ds + c) = f.sub(sys(row, k * ds + c), v);
        }
      }
  }
  return HomSpace(m, n, gens.empty() ? Subspace::whole(f, u) : kernel(sys));
}

// ---------------------------------------------------------------------------
// Duality

/// M* = Hom_K(M, K) on the opposite side; in the dual basis the action matrices are transposes.
inline Module dual_module(const Module& m) {
  std::vector<Matrix> act;
  for (const auto& a : m.action()) act.push_back(a.transpose());
  return Module::unchecked(m.algebra(), opposite(m.side()), m.dim(), std::move(act));
}

/// f* : N* -> M*.
inline ModuleMap dual_map(const ModuleMap& f) {
  return ModuleMap(dual_module(f.target()), dual_module(f.source()), f.matrix().transpose());
}

/// Evaluation M -> M**, x -> (phi -> phi(x)).
inline ModuleMap eta_map(const Module& m) {
  const Module dd = dual_module(dual_module(m));
  // eta(e_i)(e*_j) = e*_j(e_i) = delta_ij, which in the double-dual basis is e**_i
  Matrix e(m.field(), m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) e(j, i) = (i == j) ? 1 : 0;
  ModuleMap eta(m, dd, e);
  if (rank(e) != m.dim()) throw ModuleError("evaluation map into the double dual is not bijective");
  return eta;
}

// ---------------------------------------------------------------------------
// Tensor products over R

/**
 * N ⊗_R M for N a right and M a left module, as the quotient of
 * K^{dim N · dim M} (index a·dim M + b for n_a ⊗ m_b) by the balancing
 * relations n b ⊗ m - n ⊗ b m.
 */
class TensorSpace {
 public:
  TensorSpace(Module right, Module left, Subspace relations)
      : n_(std::move(right)), m_(std::move(left)), rel_(std::move(relations)) {
    std::vector<bool> pivot(rel_.ambient_dim(), false);
    for (auto c : rel_.pivots()) pivot[c] = true;
    for (std::size_t c = 0; c < rel_.ambient_dim(); ++c)
      if (!pivot[c]) free_.push_back(c);
  }

  const Module& right() const { return n_; }
  const Module& left() const { return m_; }
  const Subspace& relations() const { return rel_; }
  std::size_t ambient_dim() const { return rel_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }

  /// Quotient coordinates of an ambient vector.
  Vec project(const Vec& v) const {
    const Vec r = rel_.reduce(v);
    Vec out(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) out[i] = r[free_[i]];
    return out;
  }
  /// Ambient representative of quotient coordinates.
  Vec lift(const Vec& c) const {
    Vec v(ambient_dim(), 0);
    for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = c[i];
    return v;
  }
  /// Matrix of the projection K^{dN dM} -> N⊗M.
  Matrix projection_matrix() const {
    Matrix p(n_.field(), dim(), ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      const Vec c = project(unit_vec(ambient_dim(), j));
      for (std::size_t i = 0; i < c.size(); ++i) p(i, j) = c[i];
    }
    return p;
  }
  /// Class of n ⊗ m.
  Vec bilinear(const Vec& n, const Vec& m) const {
    Vec v(ambient_dim(), 0);
    const PrimeField& f = n_.field();
    for (std::size_t a = 0; a < n.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) v[a * m.size() + b] = f.mul(n[a], m[b]);
    return project(v);
  }

 private:
  Module n_, m_;
  Subspace rel_;
  std::vector<std::size_t> free_;
};

inline TensorSpace tensor_over_R(const Module& n, const Module& m) {
  if (n.side() != Side::right || m.side() != Side::left)
    throw Mismatch("tensor_over_R expects a right module tensored with a left module");
  if (!same_algebra(n.algebra(), m.algebra())) throw Mismatch("tensor_over_R: modules over different algebras");
  const std::size_t dn = n.dim(), dm = m.dim();
  const PrimeField& f = n.field();
  std::vector<Vec> rels;
  for (auto g : n.algebra()->generators()) {
    const Matrix& an = n.action(g);
    const Matrix& am = m.action(g);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b) {
        Vec v(dn * dm, 0);
        // (n_a g) ⊗ m_b
        for (std::size_t a2 = 0; a2 < dn; ++a2)
          if (an(a2, a)) v[a2 * dm + b] = f.add(v[a2 * dm + b], an(a2, a));
        // - n_a ⊗ (g m_b)
        for (std::size_t b2 = 0; b2 < dm; ++b2)
          if (am(b2, b)) v[a * dm + b2] = f.sub(v[a * dm + b2], am(b2, b));
        if (!is_zero(v)) rels.push_back(std::move(v));
      }
  }
  return TensorSpace(n, m, Subspace::span(f, dn * dm, rels));
}

/// Matrix of g ⊗ h : N⊗M -> N'⊗M' in quotient coordinates.
inline Matrix tensor_map(const TensorSpace& from, const TensorSpace& to, const Matrix& g, const Matrix& h) {
  const Matrix amb = Matrix::kron(g, h);
  Matrix out(g.field(), to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    const Vec c = to.project(amb * from.lift(unit_vec(from.dim(), j)));
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

struct ProjectivityResult {
  bool projective = false;
  FreeCover cover;
  std::optional<ModuleMap> section;  ///< s with cover.epi ∘ s = id when projective
};

/// M is projective iff its free cover splits.
inline ProjectivityResult is_projective(const Module& m) {
  ProjectivityResult res;
  res.cover = free_cover(m);
  if (m.dim() == 0) {
    res.projective = true;
    res.section = ModuleMap::zero(m, res.cover.free);
    return res;
  }
  const HomSpace hom = hom_space(m, res.cover.free);
  const Matrix& pi = res.cover.epi.matrix();
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < hom.dim(); ++k) cols.push_back(HomSpace::flatten(pi * hom.matrix_of(hom.space().vector(k))));
  const Matrix sys = Matrix::from_columns(m.field(), m.dim() * m.dim(), cols);
  auto sol = solve(sys, HomSpace::flatten(Matrix::identity(m.field(), m.dim())));
  if (sol) {
    res.projective = true;
    res.section = ModuleMap(m, res.cover.free, hom.element(*sol));
  }
  return res;
}

/**
 * Builds a module over a quiver algebra from a representation: one vector
 * space per vertex and one matrix per arrow. For left modules the arrow a
 * maps the space at source(a) to the space at target(a); for right modules
 * the direction is reversed.
 */
inline Module module_from_representation(const AlgebraPtr& alg, Side side, const std::vector<std::size_t>& dims,
                                         const std::vector<Matrix>& arrow_maps) {
  if (!alg->quiver()) throw ModuleError("representations need a quiver algebra");
  const QuiverPresentation& q = *alg->quiver();
  if (dims.size() != q.vertices || arrow_maps.size() != q.arrows.size())
    throw ModuleError("representation needs one dimension per vertex and one matrix per arrow");
  std::vector<std::size_t> off(q.vertices + 1, 0);
  for (std::size_t v = 0; v < q.vertices; ++v) off[v + 1] = off[v] + dims[v];
  const std::size_t total = off.back();
  const PrimeField& f = alg->field();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    const std::size_t from = side == Side::left ? arr.source : arr.target;
    const std::size_t to = side == Side::left ? arr.target : arr.source;
    if (arrow_maps[a].rows() != dims[to] || arrow_maps[a].cols() != dims[from])
      throw ModuleError("matrix for arrow " + arr.name + " has the wrong shape");
  }
  std::vector<Matrix> act;
  for (const Path& p : alg->basis_paths()) {
    Matrix m(f, total, total);
    if (p.arrows.empty()) {
      m.set_block(off[p.source], off[p.source], Matrix::identity(f, dims[p.source]));
    } else {
      // left: arrows applied back-to-front; right: front-to-back
      Matrix acc = Matrix::identity(f, side == Side::left ? dims[p.source] : dims[p.target]);
      if (side == Side::left) {
        for (std::size_t k = p.arrows.size(); k-- > 0;) acc = arrow_maps[p.arrows[k]] * acc;
        m.set_block(off[p.target], off[p.source], acc);
      } else {
        for (std::size_t k = 0; k < p.arrows.size(); ++k) acc = arrow_maps[p.arrows[k]] * acc;
        m.set_block(off[p.source], off[p.target], acc);
      }
    }
    act.push_back(std::move(m));
  }
  return Module::create(alg, side, total, std::move(act));
}

/// Simple module at vertex v (0-based) of a quiver algebra.
inline Module simple_module(const AlgebraPtr& alg, Side side, std::size_t v) {
  if (!alg->quiver()) throw AlgebraError("simple_module needs a quiver algebra");
  const QuiverPresentation& q = *alg->quiver();
  if (v >= q.vertices) throw AlgebraError("simple_module: no vertex " + std::to_string(v + 1));
  std::vector<std::size_t> dims(q.vertices, 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows) {
    const std::size_t from = side == Side::left ? a.source : a.target;
    const std::size_t to = side == Side::left ? a.target : a.source;
    maps.emplace_back(alg->field(), dims[to], dims[from]);
  }
  return module_from_representation(alg, side, dims, maps);
}

/// Indecomposable projective R e (left) or e R (right) for an idempotent e.
inline SubmoduleResult projective_at(const AlgebraPtr& alg, Side side, const Vec& idempotent) {
  const Module r = free_module(alg, side, 1);
  return submodule(r, generated_subspace(r, {idempotent}));
}

/// Hom_R(M, R) on the opposite side, (f r)(x) = f(x) r for left M.
struct TDual {
  Module module;
  HomSpace hom;
};

inline TDual t_dual(const Module& m) {
  const AlgebraPtr& alg = m.algebra();
  const Module r = free_module(alg, m.side(), 1);
  HomSpace hom = hom_space(m, r);
  const std::size_t k = hom.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    // post-multiplication on R from the side opposite to the module's
    const Matrix mult = m.side() == Side::left ? alg->right_mult(alg->basis_element(i)) : alg->left_mult(alg->basis_element(i));
    Matrix a(m.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Vec c = hom.coords(mult * hom.matrix_of(hom.space().vector(j)));
      for (std::size_t l = 0; l < k; ++l) a(l, j) = c[l];
    }
    act.push_back(std::move(a));
  }
  return {Module::create(alg, opposite(m.side()), k, std::move(act)), std::move(hom)};
}

/// f^t : N^t -> M^t for f : M -> N, h -> h ∘ f.
inline ModuleMap t_dual_map(const ModuleMap& f, const TDual& src_t, const TDual& tgt_t) {
  Matrix m(f.source().field(), src_t.module.dim(), tgt_t.module.dim());
  for (std::size_t j = 0; j < tgt_t.module.dim(); ++j) {
    const Vec c = src_t.hom.coords(tgt_t.hom.matrix_of(tgt_t.hom.space().vector(j)) * f.matrix());
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return ModuleMap(tgt_t.module, src_t.module, m);
}

}  // namespace ppfun
