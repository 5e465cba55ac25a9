#pragma once

/**
 * @file homological.hpp
 * @brief Free resolutions, Ext, minimal projective presentations, transpose
 *        and AR translate, stable Hom (both flavors), the map
 *        M^t ⊗ N -> Hom(M, N), and the injective coresolution step
 *        0 -> A -> P* -> L* -> 0.
 */

#include <optional>
#include <utility>
#include <vector>

#include "ppfun/errors.hpp"
#include "ppfun/exactlin.hpp"
#include "ppfun/module.hpp"

namespace ppfun {

// ---------------------------------------------------------------------------
// Free resolutions and Ext

struct FreeResolution {
  ModuleMap augmentation;                ///< F0 -> N
  std::vector<ModuleMap> differentials;  ///< d_{k+1} : F_{k+1} -> F_k
  std::vector<std::size_t> ranks;        ///< rank of F_k

  std::size_t length() const { return differentials.size(); }
  const Module& term(std::size_t k) const { return k == 0 ? augmentation.source() : differentials[k - 1].source(); }
};

/// F_length -> ... -> F_0 -> N; each F_{k+1} is a free cover of ker d_k.
inline FreeResolution free_resolution(const Module& n, std::size_t length) {
  FreeResolution res;
  FreeCover c0 = free_cover(n);
  res.augmentation = c0.epi;
  res.ranks.push_back(c0.rank);
  ModuleMap prev = c0.epi;
  for (std::size_t k = 0; k < length; ++k) {
    const SubmoduleResult ker = map_kernel(prev);
    const FreeCover c = free_cover(ker.module);
    const ModuleMap d = ker.inclusion.after(c.epi);
    res.differentials.push_back(d);
    res.ranks.push_back(c.rank);
    prev = d;
  }
  return res;
}

inline bool is_exact_resolution(const FreeResolution& r) {
  const ModuleMap* prev = &r.augmentation;
  if (rank(prev->matrix()) != prev->target().dim()) return false;
  for (const auto& d : r.differentials) {
    if (!(prev->matrix() * d.matrix()).is_zero()) return false;
    if (rank(d.matrix()) + rank(prev->matrix()) != prev->source().dim()) return false;
    prev = &d;
  }
  return true;
}

namespace detail {

/// Matrix of Hom(F_k, M) -> Hom(F_{k+1}, M), X -> X d, in the identification Hom(R^a, M) = M^a.
inline Matrix cochain_matrix(const ModuleMap& d, std::size_t rank_src, std::size_t rank_tgt, const Module& m) {
  const AlgebraPtr& alg = m.algebra();
  const std::size_t dim = alg->dim(), dm = m.dim();
  Matrix out(m.field(), rank_src * dm, rank_tgt * dm);
  for (std::size_t j = 0; j < rank_src; ++j) {
    const Vec img = d(free_element(alg, rank_src, j, alg->unit()));
    for (std::size_t i = 0; i < rank_tgt; ++i) {
      const Vec x(img.begin() + static_cast<std::ptrdiff_t>(i * dim), img.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
      if (!is_zero(x)) out.set_block(j * dm, i * dm, m.act(x));
    }
  }
  return out;
}

}  // namespace detail

/// dim Ext^k(N, M) for k = 0..max_degree from one resolution.
inline std::vector<std::size_t> ext_dims(const Module& n, const Module& m, std::size_t max_degree) {
  require_compatible(n, m, "ext_dim");
  const FreeResolution res = free_resolution(n, max_degree + 1);
  std::vector<std::size_t> ranks_delta;  // rank of delta_k : Hom(F_k,M) -> Hom(F_{k+1},M)
  for (std::size_t k = 0; k <= max_degree; ++k)
    ranks_delta.push_back(rank(detail::cochain_matrix(res.differentials[k], res.ranks[k + 1], res.ranks[k], m)));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const std::size_t ker = res.ranks[k] * m.dim() - ranks_delta[k];
    out.push_back(ker - (k == 0 ? 0 : ranks_delta[k - 1]));
  }
  return out;
}

inline std::size_t ext_dim(const Module& n, const Module& m, std::size_t degree) { return ext_dims(n, m, degree)[degree]; }

// ---------------------------------------------------------------------------
// Minimal presentations, transpose, tau

inline void require_radical(const Algebra& a) {
  if (!a.radical_basis() || !a.idempotents())
    throw NoRadicalKnown("operation needs an algebra with known radical and primitive idempotents");
}

/// rad(R)·M (left) or M·rad(R) (right).
inline Subspace radical_part(const Module& m) {
  require_radical(*m.algebra());
  std::vector<Vec> vs;
  for (const auto& r : *m.algebra()->radical_basis()) {
    const Matrix a = m.act(r);
    for (std::size_t j = 0; j < m.dim(); ++j) vs.push_back(a.col(j));
  }
  return Subspace::span(m.field(), m.dim(), vs);
}

struct ProjectiveCover {
  Module module;
  ModuleMap epi;
  std::vector<std::size_t> multiplicity;  ///< copies of P_i per idempotent
};

/// Projective cover ⊕ P_i^{t_i} -> M, P_i = R e_i (left) or e_i R (right).
inline ProjectiveCover projective_cover(const Module& m) {
  const AlgebraPtr& alg = m.algebra();
  require_radical(*alg);
  const auto& idem = *alg->idempotents();
  const Subspace rad = radical_part(m);
  std::vector<Module> parts;
  std::vector<Matrix> maps;
  ProjectiveCover pc;
  Subspace covered = rad;
  const Module reg = free_module(alg, m.side(), 1);
  for (const auto& e : idem) {
    const Matrix ea = m.act(e);
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Vec g = ea.col(j);
      if (covered.contains(g)) continue;
      covered = covered + Subspace::span(m.field(), m.dim(), {g});
      ++count;
      const SubmoduleResult p = projective_at(alg, m.side(), e);
      const ModuleMap from_r = map_from_free(reg, 1, m, {g});
      parts.push_back(p.module);
      maps.push_back(from_r.matrix() * p.inclusion.matrix());
    }
    pc.multiplicity.push_back(count);
  }
  if (covered.dim() != m.dim()) throw ModuleError("idempotents do not cover the top of the module");
  if (parts.empty()) {
    pc.module = Module::zero(alg, m.side());
    pc.epi = ModuleMap::zero(pc.module, m);
    return pc;
  }
  const DirectSum ds = direct_sum(parts);
  Matrix epi(m.field(), m.dim(), ds.module.dim());
  std::size_t off = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    epi.set_block(0, off, maps[i]);
    off += parts[i].dim();
  }
  pc.module = ds.module;
  pc.epi = ModuleMap(ds.module, m, epi);
  return pc;
}

struct MinimalPresentation {
  ProjectiveCover p0;   ///< P0 -> N
  ProjectiveCover p1;   ///< P1 -> ker(P0 -> N)
  ModuleMap d1;         ///< P1 -> P0
  bool minimal = false; ///< both kernels lie in the radical of their covers
};

inline MinimalPresentation minimal_presentation(const Module& n) {
  MinimalPresentation mp;
  mp.p0 = projective_cover(n);
  const SubmoduleResult k0 = map_kernel(mp.p0.epi);
  mp.p1 = projective_cover(k0.module);
  mp.d1 = k0.inclusion.after(mp.p1.epi);
  const SubmoduleResult k1 = map_kernel(mp.p1.epi);
  const Subspace k0_in_p0 = column_space(k0.inclusion.matrix());
  const Subspace k1_in_p1 = column_space(k1.inclusion.matrix());
  mp.minimal = radical_part(mp.p0.module).contains(k0_in_p0) && radical_part(mp.p1.module).contains(k1_in_p1);
  return mp;
}

struct TransposeTau {
  Module tr;                 ///< opposite side
  Module tau;                ///< same side as the input
  bool input_projective = false;
};

/// Tr N = coker(P0^t -> P1^t), tau N = (Tr N)*.
inline TransposeTau transpose_and_tau(const Module& n) {
  const MinimalPresentation mp = minimal_presentation(n);
  const TDual t0 = t_dual(mp.p0.module);
  const TDual t1 = t_dual(mp.p1.module);
  const ModuleMap dt = t_dual_map(mp.d1, t1, t0);
  const QuotientResult cok = map_cokernel(dt);
  TransposeTau res;
  res.tr = cok.module;
  res.tau = dual_module(cok.module);
  res.input_projective = mp.p1.module.dim() == 0;
  return res;
}

// ---------------------------------------------------------------------------
// Stable Hom

enum class StableFlavor { projective, injective };

inline const char* to_string(StableFlavor f) { return f == StableFlavor::projective ? "projective" : "injective"; }

struct StableHomValue {
  HomSpace total;
  Subspace relations;  ///< maps factoring through a projective (resp. injective)
  std::size_t dim() const { return total.dim() - relations.dim(); }
};

/// Monomorphism M -> E into an injective, E = (free cover of M*)*.
inline ModuleMap injective_embedding(const Module& m) {
  const FreeCover c = free_cover(dual_module(m));
  const ModuleMap rho_dual = dual_map(c.epi);  // M** -> F*
  const ModuleMap eta = eta_map(m);
  return rho_dual.after(eta);
}

inline StableHomValue stable_hom(const Module& m, const Module& n, StableFlavor flavor) {
  require_compatible(m, n, "stable_hom");
  HomSpace total = hom_space(m, n);
  std::vector<Vec> rel;
  if (flavor == StableFlavor::projective) {
    const FreeCover c = free_cover(n);
    const HomSpace h = hom_space(m, c.free);
    for (std::size_t k = 0; k < h.dim(); ++k) rel.push_back(HomSpace::flatten(c.epi.matrix() * h.matrix_of(h.space().vector(k))));
  } else {
    const ModuleMap iota = injective_embedding(m);
    const HomSpace h = hom_space(iota.target(), n);
    for (std::size_t k = 0; k < h.dim(); ++k) rel.push_back(HomSpace::flatten(h.matrix_of(h.space().vector(k)) * iota.matrix()));
  }
  Subspace r = Subspace::span(m.field(), total.space().ambient_dim(), rel);
  return {std::move(total), std::move(r)};
}

// ---------------------------------------------------------------------------

struct TDualTensorMap {
  TDual mt;
  TensorSpace tensor;
  HomSpace hom;
  Matrix map;  ///< tensor quotient coords -> Hom coords
  std::size_t cokernel_dim = 0;
};

/// M^t ⊗ N -> Hom(M, N), f ⊗ y -> (x -> f(x) y), for left modules M, N.
inline TDualTensorMap t_dual_tensor_map(const Module& m, const Module& n) {
  require_compatible(m, n, "t_dual_tensor_map");
  if (m.side() != Side::left) throw Mismatch("t_dual_tensor_map expects left modules");
  TDual mt = t_dual(m);
  TensorSpace ten = tensor_over_R(mt.module, n);
  HomSpace hom = hom_space(m, n);
  const std::size_t dt = mt.module.dim(), dn = n.dim(), dm = m.dim();
  Matrix amb(m.field(), dn * dm, dt * dn);
  for (std::size_t a = 0; a < dt; ++a) {
    const Matrix fa = mt.hom.matrix_of(mt.hom.space().vector(a));  // dim R x dm
    for (std::size_t b = 0; b < dn; ++b) {
      Matrix h(m.field(), dn, dm);
      for (std::size_t c = 0; c < dm; ++c) {
        const Vec col = n.act(fa.col(c)) * unit_vec(dn, b);
        for (std::size_t r = 0; r < dn; ++r) h(r, c) = col[r];
      }
      const Vec flat = HomSpace::flatten(h);
      for (std::size_t i = 0; i < flat.size(); ++i) amb(i, a * dn + b) = flat[i];
    }
  }
  Matrix map(m.field(), hom.dim(), ten.dim());
  for (std::size_t j = 0; j < ten.dim(); ++j) {
    const Vec img = amb * ten.lift(unit_vec(ten.dim(), j));
    if (!hom.space().contains(img)) throw ModuleError("t-dual tensor image is not a module map");
    const Vec c = hom.coords(hom.matrix_of(img));
    for (std::size_t i = 0; i < c.size(); ++i) map(i, j) = c[i];
  }
  for (std::size_t k = 0; k < ten.relations().dim(); ++k)
    if (!is_zero(amb * ten.relations().vector(k))) throw ModuleError("t-dual tensor map does not kill the balancing relations");
  const std::size_t cok = hom.dim() - rank(map);
  return {std::move(mt), std::move(ten), std::move(hom), std::move(map), cok};
}

// ---------------------------------------------------------------------------

/**
 * For a module A: P -> A* a free cover of the dual, L its kernel, and the
 * dualized sequence 0 -> A -> P* -> L* -> 0 (A identified with A** by eta).
 */
struct ExtShift {
  Module p_dual;
  Module l_dual;
  ModuleMap into;   ///< A -> P*
  ModuleMap onto;   ///< P* -> L*
};

inline ExtShift ext_shift(const Module& a) {
  const FreeCover c = free_cover(dual_module(a));
  const SubmoduleResult l = map_kernel(c.epi);
  const ModuleMap onto = dual_map(l.inclusion);
  const ModuleMap into = dual_map(c.epi).after(eta_map(a));
  return {onto.source(), onto.target(), into, onto};
}

inline bool is_short_exact(const ModuleMap& f, const ModuleMap& g) {
  return rank(f.matrix()) == f.source().dim() && rank(g.matrix()) == g.target().dim() &&
         (g.matrix() * f.matrix()).is_zero() && f.source().dim() + g.target().dim() == f.target().dim();
}

}  // namespace ppfun
