#pragma once

/**
 * @file functor.hpp
 * @brief Finitely presented functors given by a presentation f: A -> B, and
 *        pointwise evaluation of pp-pair functors, annihilator functors, duals,
 *        preduals and dF.
 *
 * Values are subquotients of an explicit ambient K-space. Hom values live in
 * flattened target.dim x source.dim matrices (row-major), pp values in M^n,
 * annihilator values in (M*)^n, tensor values in quotient coordinates.
 */

#include <optional>
#include <utility>
#include <vector>

#include "ppfun/exactlin.hpp"
#include "ppfun/module.hpp"
#include "ppfun/pp.hpp"

namespace ppfun {

using FunctorValue = Subquotient;

enum class Variance { covariant, contravariant };

inline const char* to_string(Variance v) { return v == Variance::covariant ? "covariant" : "contravariant"; }

/**
 * Covariant: F = coker((B,-) -> (A,-)). Contravariant: G = coker((-,A) -> (-,B)).
 * The argument category is modules on the presentation's side.
 */
struct FpFunctor {
  Variance variance = Variance::covariant;
  ModuleMap presentation;

  Side side() const { return presentation.source().side(); }
};

// ---------------------------------------------------------------------------
// pp-pair and annihilator functors

inline FunctorValue eval_pp_pair(const PpPair& pair, const Module& m) {
  return {solution_set(pair.phi(), m), solution_set(pair.psi(), m)};
}

/// (M*)^n with the evaluation pairing sum_i f_i(a_i); in dual bases this is the dot product.
inline FunctorValue annihilator_eval(const PpPair& pair, const Module& m) {
  require_formula_module(pair.phi(), m);
  const std::size_t nd = pair.phi().n() * m.dim();
  const Matrix pairing = Matrix::identity(m.field(), nd);
  return {pairing_annihilator(solution_set(pair.psi(), m), pairing),
          pairing_annihilator(solution_set(pair.phi(), m), pairing)};
}

/// F(g) for the pp-pair functor: g^n on phi(M)/psi(M).
inline Matrix pp_pair_map(const PpPair& pair, const ModuleMap& g, const FunctorValue& at_src, const FunctorValue& at_tgt) {
  auto m = at_src.induced(at_tgt, map_power(g, pair.phi().n()));
  if (!m) throw ModuleError("map does not preserve the pp pair values");
  return *m;
}

/// A(g) : A(N) -> A(M) for g: M -> N, the restriction of (g*)^n.
inline Matrix annihilator_map(const PpPair& pair, const ModuleMap& g, const FunctorValue& at_src, const FunctorValue& at_tgt) {
  const Matrix gt = Matrix::block_diagonal(std::vector<Matrix>(pair.phi().n(), g.matrix().transpose()));
  auto m = at_tgt.induced(at_src, gt);
  if (!m) throw ModuleError("dual map does not preserve the annihilator values");
  return *m;
}

/**
 * Matrix of the evaluation pairing F(M) x A(M) -> K, rows indexed by the F
 * basis, columns by the A basis. Throws if it is not well defined.
 */
inline Matrix evaluation_pairing(const FunctorValue& fv, const FunctorValue& av) {
  const PrimeField& f = fv.total().field();
  if (fv.ambient_dim() != av.ambient_dim()) throw DimensionMismatch("pairing ambients differ");
  for (const auto& r : fv.relations().vectors())
    for (const auto& t : av.total().vectors())
      if (dot(f, r, t)) throw DegeneratePairing("pairing is not well defined on the relations of F");
  for (const auto& t : fv.total().vectors())
    for (const auto& r : av.relations().vectors())
      if (dot(f, t, r)) throw DegeneratePairing("pairing is not well defined on the relations of A");
  Matrix p(f, fv.dim(), av.dim());
  for (std::size_t i = 0; i < fv.dim(); ++i)
    for (std::size_t j = 0; j < av.dim(); ++j) p(i, j) = dot(f, fv.complement().vector(i), av.complement().vector(j));
  return p;
}

inline bool is_nondegenerate(const Matrix& pairing) {
  return pairing.rows() == pairing.cols() && rank(pairing) == pairing.rows();
}

// ---------------------------------------------------------------------------
// Presentations

namespace detail {

/// Matrix on flattened Hom ambients of X -> G X (G: dT x dT', X: dT' x dS).
inline Matrix post_compose(const Matrix& g, std::size_t ds) { return Matrix::kron(g, Matrix::identity(g.field(), ds)); }
/// Matrix on flattened Hom ambients of X -> X G (X: dT x dS', G: dS' x dS).
inline Matrix pre_compose(const Matrix& g, std::size_t dt) {
  return Matrix::kron(Matrix::identity(g.field(), dt), g.transpose());
}

}  // namespace detail

inline FunctorValue eval_presentation(const FpFunctor& F, const Module& m) {
  const ModuleMap& f = F.presentation;
  require_compatible(f.source(), m, "eval_presentation");
  if (F.variance == Variance::covariant) {
    // coker(Hom(B,M) -> Hom(A,M)), g -> g f
    const HomSpace total = hom_space(f.source(), m);
    const HomSpace from = hom_space(f.target(), m);
    const Matrix pre = detail::pre_compose(f.matrix(), m.dim());
    std::vector<Vec> rel;
    for (const auto& v : from.space().vectors()) rel.push_back(pre * v);
    return {total.space(), Subspace::span(m.field(), total.space().ambient_dim(), rel)};
  }
  // coker(Hom(M,A) -> Hom(M,B)), h -> f h
  const HomSpace total = hom_space(m, f.target());
  const HomSpace from = hom_space(m, f.source());
  const Matrix post = detail::post_compose(f.matrix(), m.dim());
  std::vector<Vec> rel;
  for (const auto& v : from.space().vectors()) rel.push_back(post * v);
  return {total.space(), Subspace::span(m.field(), total.space().ambient_dim(), rel)};
}

/// F(g) for g: M -> N; covariant values map M -> N, contravariant N -> M.
inline Matrix presentation_map(const FpFunctor& F, const ModuleMap& g, const FunctorValue& at_src, const FunctorValue& at_tgt) {
  const ModuleMap& f = F.presentation;
  if (F.variance == Variance::covariant) {
    auto m = at_src.induced(at_tgt, detail::post_compose(g.matrix(), f.source().dim()));
    if (!m) throw ModuleError("induced map on functor values is not defined");
    return *m;
  }
  auto m = at_tgt.induced(at_src, detail::pre_compose(g.matrix(), f.target().dim()));
  if (!m) throw ModuleError("induced map on functor values is not defined");
  return *m;
}

/// The K-dual of a value: ann(relations) / ann(total) under the dot product.
inline FunctorValue dual_value(const FunctorValue& v) {
  const Matrix id = Matrix::identity(v.total().field(), v.ambient_dim());
  return {pairing_annihilator(v.relations(), id), pairing_annihilator(v.total(), id)};
}

/// (F M)*; on maps F*(g) is the transpose of F(g) in dual bases.
inline FunctorValue dual_functor_eval(const FpFunctor& F, const Module& m) {
  if (F.variance != Variance::covariant) throw Mismatch("dual_functor_eval expects a covariant functor");
  return dual_value(eval_presentation(F, m));
}

/// F_*(M) = F(M*) for F on the side opposite to M.
inline FunctorValue predual_eval(const FpFunctor& F, const Module& m) {
  if (F.side() == m.side()) throw Mismatch("predual_eval expects a module on the opposite side of the functor");
  return eval_presentation(F, dual_module(m));
}

/// (dF)(N) = ker(N ⊗ f : N ⊗ A -> N ⊗ B) for F covariant on left modules, N right.
inline FunctorValue d_functor_eval(const FpFunctor& F, const Module& n) {
  if (F.variance != Variance::covariant) throw Mismatch("d_functor_eval expects a covariant functor");
  if (F.side() != Side::left || n.side() != Side::right)
    throw Mismatch("d_functor_eval expects a functor on left modules and a right module");
  const ModuleMap& f = F.presentation;
  const TensorSpace ta = tensor_over_R(n, f.source());
  const TensorSpace tb = tensor_over_R(n, f.target());
  const Matrix nf = tensor_map(ta, tb, Matrix::identity(n.field(), n.dim()), f.matrix());
  return {kernel(nf), Subspace::zero(n.field(), ta.dim())};
}

// ---------------------------------------------------------------------------
// pp pair -> presentation

namespace detail {

/// The unique U with U ∘ proj = g for a surjective projection `proj`.
inline Matrix factor_through(const Matrix& proj, const Matrix& g) {
  Matrix u(g.field(), g.rows(), proj.rows());
  for (std::size_t j = 0; j < proj.rows(); ++j) {
    auto s = solve(proj, unit_vec(proj.rows(), j));
    if (!s) throw ModuleError("projection is not surjective");
    const Vec col = g * *s;
    for (std::size_t i = 0; i < col.size(); ++i) u(i, j) = col[i];
  }
  return u;
}

/// A witness tuple y with A x = B y in M, for x in phi(M).
inline Vec solve_witness(const PpFormula& phi, const Module& m, const Vec& x) {
  const Matrix sys = system_matrix(phi, m);
  const std::size_t nx = phi.n() * m.dim(), ny = phi.m() * m.dim();
  const Matrix sx = sys.block(0, 0, sys.rows(), nx);
  const Matrix sy = sys.block(0, nx, sys.rows(), ny);
  Vec rhs = sx * x;
  for (auto& v : rhs) v = m.field().neg(v);
  auto y = solve(sy, rhs);
  if (!y) throw ModuleError("tuple does not satisfy the formula");
  return *y;
}

}  // namespace detail

struct PairPresentation {
  FpFunctor functor;
  FreeRealization phi_realization;
  FreeRealization psi_realization;
};

/**
 * f = [u; q] : C_phi -> C_psi ⊕ coker(pi_phi), where u sends the tuple of
 * C_phi to the tuple of C_psi and q is the cokernel projection of
 * pi_phi : R^n -> C_phi.
 */
inline PairPresentation pair_to_presentation(const PpPair& pair) {
  const PpFormula& phi = pair.phi();
  const AlgebraPtr& alg = phi.algebra();
  const std::size_t n = phi.n(), m = phi.m(), d = alg->dim();
  FreeRealization cphi = free_realization(phi);
  FreeRealization cpsi = free_realization(pair.psi());
  const Module& C = cphi.module;
  const Module& D = cpsi.module;

  // u on generators: x-generators to the psi tuple, y-generators to a witness
  const Vec wit = n == 0 && m == 0 ? Vec{} : detail::solve_witness(phi, D, cpsi.tuple);
  std::vector<Vec> images;
  for (std::size_t j = 0; j < n; ++j)
    images.emplace_back(cpsi.tuple.begin() + static_cast<std::ptrdiff_t>(j * D.dim()),
                        cpsi.tuple.begin() + static_cast<std::ptrdiff_t>((j + 1) * D.dim()));
  for (std::size_t k = 0; k < m; ++k)
    images.emplace_back(wit.begin() + static_cast<std::ptrdiff_t>(k * D.dim()),
                        wit.begin() + static_cast<std::ptrdiff_t>((k + 1) * D.dim()));
  const ModuleMap ufree = map_from_free(cphi.free, n + m, D, images);
  const Matrix u = detail::factor_through(cphi.projection.matrix(), ufree.matrix());

  // pi_phi : R^n -> C_phi
  const Module rn = free_module(alg, phi.side(), n);
  std::vector<Vec> tup;
  for (std::size_t j = 0; j < n; ++j)
    tup.emplace_back(cphi.tuple.begin() + static_cast<std::ptrdiff_t>(j * C.dim()),
                     cphi.tuple.begin() + static_cast<std::ptrdiff_t>((j + 1) * C.dim()));
  const ModuleMap pi = map_from_free(rn, n, C, tup);
  const QuotientResult cok = map_cokernel(pi);
  (void)d;

  const DirectSum target = direct_sum({D, cok.module});
  const Matrix fm = Matrix::vstack(u, cok.projection.matrix());
  return {FpFunctor{Variance::covariant, ModuleMap(C, target.module, fm)}, std::move(cphi), std::move(cpsi)};
}

/**
 * Evaluation at the tuple, Hom(C_phi, M) -> M^n, as a matrix on the
 * flattened Hom ambient. It induces the isomorphism coker -> phi(M)/psi(M).
 */
inline Matrix tuple_evaluation(const FreeRealization& fr, std::size_t n, const Module& m) {
  const std::size_t dc = fr.module.dim(), dm = m.dim();
  Matrix ev(m.field(), n * dm, dm * dc);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dc; ++c) ev(j * dm + r, r * dc + c) = fr.tuple[j * dc + c];
  return ev;
}

/// True iff `ambient_map` induces a bijection between the two values.
inline bool induces_isomorphism(const FunctorValue& from, const FunctorValue& to, const Matrix& ambient_map) {
  auto m = from.induced(to, ambient_map);
  return m && m->rows() == m->cols() && rank(*m) == m->rows();
}

/**
 * Contravariant presentation of the annihilator functor: dualize the
 * covariant presentation f' : A' -> B' of F_{D psi / D phi} to f'* : B'* -> A'*.
 */
inline FpFunctor annihilator_presentation(const PpPair& pair) {
  const PpPair dp = make_pair(dual_formula(pair.psi()), dual_formula(pair.phi()));
  const PairPresentation pres = pair_to_presentation(dp);
  return {Variance::contravariant, dual_map(pres.functor.presentation)};
}

/// Representable (A, -) presented by A -> 0.
inline FpFunctor representable(const Module& a) {
  return {Variance::covariant, ModuleMap::zero(a, Module::zero(a.algebra(), a.side()))};
}

}  // namespace ppfun
