#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ppfun/module.hpp"
#include "ppfun/verify.hpp"

using namespace ppfun;
using verify::Rng;

namespace {

const PrimeField F2(2);

/// K = R / eps R over the dual numbers.
Module residue_field(Side s) {
  const auto a = algebras::dual_numbers(F2);
  const Module r = free_module(a, s, 1);
  return quotient_module(r, Subspace::span(F2, 2, {unit_vec(2, 1)})).module;
}

std::vector<AlgebraPtr> small_algebras() {
  return {algebras::field(F2), algebras::dual_numbers(F2), algebras::quadratic_extension(F2),
          algebras::square_zero_plane(F2), algebras::linear_quiver(F2, 2), algebras::truncated_polynomial(F2, 3)};
}

}  // namespace

TEST(Module, FreeModuleIsValid) {
  for (const auto& a : small_algebras())
    for (Side s : {Side::left, Side::right}) {
      const Module r = free_module(a, s, 2);
      EXPECT_EQ(r.dim(), 2 * a->dim());
      EXPECT_NO_THROW(r.validate());
    }
}

TEST(Module, RejectsWrongActionCount) {
  const auto a = algebras::dual_numbers(F2);
  EXPECT_THROW(Module::create(a, Side::left, 1, {Matrix::identity(F2, 1)}), ModuleError);
}

TEST(Module, RejectsBrokenAxioms) {
  const auto a = algebras::dual_numbers(F2);
  // eps acting invertibly violates eps^2 = 0
  EXPECT_THROW(Module::create(a, Side::left, 1, {Matrix::identity(F2, 1), Matrix::identity(F2, 1)}), ModuleError);
  // the unit must act as the identity
  EXPECT_THROW(Module::create(a, Side::left, 1, {Matrix(F2, 1, 1), Matrix(F2, 1, 1)}), ModuleError);
}

TEST(Module, RightModuleReversesProducts) {
  const auto a = algebras::linear_quiver(F2, 2);
  const Module r = free_module(a, Side::right, 1);
  const std::size_t a1 = *a->label_index("a1"), e1 = *a->label_index("e1"), e2 = *a->label_index("e2");
  // a1 = e2 a1 e1, so on a right module A(a1) = A(e1) A(a1) A(e2)
  EXPECT_EQ(r.action(a1), r.action(e1) * r.action(a1) * r.action(e2));
}

TEST(ModuleMap, RejectsNonIntertwiner) {
  const auto a = algebras::dual_numbers(F2);
  const Module r = free_module(a, Side::left, 1);
  const Module s = residue_field(Side::left);
  EXPECT_THROW(ModuleMap(s, r, Matrix::from_rows(F2, {{1}, {0}})), ModuleError);
  EXPECT_NO_THROW(ModuleMap(s, r, Matrix::from_rows(F2, {{0}, {1}})));
}

TEST(ModuleMap, RejectsSideMismatch) {
  const auto a = algebras::dual_numbers(F2);
  EXPECT_THROW(ModuleMap::zero(free_module(a, Side::left, 1), free_module(a, Side::right, 1)), Mismatch);
}

TEST(HomSpace, MatchesEnumeration) {
  Rng rng(5);
  std::size_t nontrivial = 0;
  for (const auto& a : small_algebras())
    for (Side s : {Side::left, Side::right})
      for (int t = 0; t < 6; ++t) {
        const Module m = verify::random_module(rng, a, s, 3), n = verify::random_module(rng, a, s, 3);
        const HomSpace h = hom_space(m, n);
        EXPECT_EQ(oracle::elements(h.space()), oracle::homs(m, n));
        if (h.dim() > 0 && h.dim() < m.dim() * n.dim()) ++nontrivial;
      }
  EXPECT_GT(nontrivial, 5u);
}

TEST(TensorSpace, MatchesBalancedFormCount) {
  Rng rng(6);
  for (const auto& a : small_algebras())
    for (int t = 0; t < 6; ++t) {
      const Module n = verify::random_module(rng, a, Side::right, 3), m = verify::random_module(rng, a, Side::left, 3);
      EXPECT_EQ(tensor_over_R(n, m).dim(), oracle::tensor_dim(n, m));
    }
}

TEST(TensorSpace, RegularModuleIsUnit) {
  Rng rng(7);
  for (const auto& a : small_algebras()) {
    const Module m = verify::random_module(rng, a, Side::left, 5);
    const Module n = verify::random_module(rng, a, Side::right, 5);
    EXPECT_EQ(tensor_over_R(free_module(a, Side::right, 1), m).dim(), m.dim());
    EXPECT_EQ(tensor_over_R(n, free_module(a, Side::left, 1)).dim(), n.dim());
    EXPECT_EQ(hom_space(free_module(a, Side::left, 1), m).dim(), m.dim());
  }
}

TEST(TensorSpace, RequiresRightThenLeft) {
  const auto a = algebras::dual_numbers(F2);
  EXPECT_THROW(tensor_over_R(free_module(a, Side::left, 1), free_module(a, Side::left, 1)), Mismatch);
}

TEST(Duality, DualSwapsSidesAndEtaIsIso) {
  Rng rng(8);
  for (const auto& a : small_algebras())
    for (Side s : {Side::left, Side::right}) {
      const Module m = verify::random_module(rng, a, s, 6);
      const Module d = dual_module(m);
      EXPECT_EQ(d.side(), opposite(s));
      EXPECT_EQ(d.dim(), m.dim());
      EXPECT_NO_THROW(d.validate());
      const ModuleMap eta = eta_map(m);
      EXPECT_EQ(rank(eta.matrix()), m.dim());
    }
}

TEST(Duality, DualMapIsContravariant) {
  Rng rng(9);
  const auto a = algebras::linear_quiver(F2, 3);
  for (int t = 0; t < 10; ++t) {
    const Module x = verify::random_module(rng, a, Side::left, 5), y = verify::random_module(rng, a, Side::left, 5),
                 z = verify::random_module(rng, a, Side::left, 5);
    const ModuleMap f = verify::random_map(rng, x, y), g = verify::random_map(rng, y, z);
    EXPECT_EQ(dual_map(g.after(f)).matrix(), dual_map(f).after(dual_map(g)).matrix());
  }
}

TEST(Constructions, SubmoduleQuotientDimensions) {
  Rng rng(10);
  for (const auto& a : small_algebras()) {
    const Module r = free_module(a, Side::left, 2);
    const Subspace s = generated_subspace(r, {verify::random_vector(rng, F2, r.dim())});
    EXPECT_TRUE(is_invariant(r, s));
    const SubmoduleResult sub = submodule(r, s);
    const QuotientResult quo = quotient_module(r, s);
    EXPECT_EQ(sub.module.dim() + quo.module.dim(), r.dim());
    EXPECT_TRUE((quo.projection.matrix() * sub.inclusion.matrix()).is_zero());
  }
}

TEST(Constructions, NonInvariantSubspaceRejected) {
  const auto a = algebras::dual_numbers(F2);
  const Module r = free_module(a, Side::left, 1);
  EXPECT_THROW(submodule(r, Subspace::span(F2, 2, {unit_vec(2, 0)})), ModuleError);
}

TEST(Constructions, DirectSumHomIsAdditive) {
  Rng rng(11);
  for (const auto& a : small_algebras()) {
    const Module x = verify::random_module(rng, a, Side::left, 3), y = verify::random_module(rng, a, Side::left, 3),
                 z = verify::random_module(rng, a, Side::left, 3);
    const DirectSum ds = direct_sum({x, y});
    EXPECT_EQ(hom_space(ds.module, z).dim(), hom_space(x, z).dim() + hom_space(y, z).dim());
    EXPECT_EQ(hom_space(z, ds.module).dim(), hom_space(z, x).dim() + hom_space(z, y).dim());
  }
}

TEST(Constructions, FreeCoverIsSurjective) {
  Rng rng(12);
  for (const auto& a : small_algebras())
    for (Side s : {Side::left, Side::right}) {
      const Module m = verify::random_module(rng, a, s, 6);
      const FreeCover c = free_cover(m);
      EXPECT_EQ(rank(c.epi.matrix()), m.dim());
      EXPECT_EQ(c.free.dim(), c.rank * a->dim());
    }
}

TEST(Constructions, ProjectivityOfFreeAndSimple) {
  const auto a = algebras::linear_quiver(F2, 2);
  EXPECT_TRUE(is_projective(free_module(a, Side::left, 2)).projective);
  // the simple at the sink is projective, at the source it is not
  EXPECT_TRUE(is_projective(simple_module(a, Side::left, 1)).projective);
  EXPECT_FALSE(is_projective(simple_module(a, Side::left, 0)).projective);
  EXPECT_THROW(simple_module(algebras::dual_numbers(F2), Side::left, 0), AlgebraError);
  EXPECT_FALSE(is_projective(residue_field(Side::left)).projective);
}

TEST(Constructions, RepresentationModule) {
  const auto a = algebras::linear_quiver(F2, 2);
  const Module m = module_from_representation(a, Side::left, {1, 1}, {Matrix::identity(F2, 1)});
  EXPECT_EQ(m.dim(), 2u);
  // it is the projective cover of the simple at vertex 1
  EXPECT_TRUE(is_projective(m).projective);
  EXPECT_EQ(hom_space(m, simple_module(a, Side::left, 0)).dim(), 1u);
  EXPECT_EQ(hom_space(m, simple_module(a, Side::left, 1)).dim(), 0u);
}

TEST(Constructions, TDualOfFreeIsFree) {
  const auto a = algebras::linear_quiver(F2, 3, true);
  const TDual t = t_dual(free_module(a, Side::left, 2));
  EXPECT_EQ(t.module.side(), Side::right);
  EXPECT_EQ(t.module.dim(), 2 * a->dim());
  EXPECT_TRUE(is_projective(t.module).projective);
}

TEST(Constructions, CokernelOfKernelInclusionIsImage) {
  Rng rng(13);
  const auto a = algebras::linear_quiver(F2, 3);
  for (int t = 0; t < 10; ++t) {
    const Module x = verify::random_module(rng, a, Side::left, 6), y = verify::random_module(rng, a, Side::left, 6);
    const ModuleMap f = verify::random_map(rng, x, y);
    const MapFactors fac = map_factor(f);
    EXPECT_EQ(fac.kernel.module.dim() + fac.image.module.dim(), x.dim());
    EXPECT_EQ(fac.image.module.dim() + fac.cokernel.module.dim(), y.dim());
  }
}
