#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ppfun/functor.hpp"
#include "ppfun/verify.hpp"

using namespace ppfun;
using verify::Rng;

namespace {

const PrimeField F2(2);

AlgebraPtr keps() { return algebras::dual_numbers(F2); }

PpPair top_bottom(const AlgebraPtr& a, Side s) {
  return make_pair(PpFormula::tautology(a, s, 1), PpFormula::zero(a, s, 1));
}

PpPair top_div(const AlgebraPtr& a) {
  return make_pair(parse_pp("x1 = x1", a, Side::left), parse_pp("E y1. x1 = eps*y1", a, Side::left, 1));
}

std::size_t log_p(std::size_t p, std::size_t count) {
  std::size_t e = 0;
  while (oracle::power(p, e) < count) ++e;
  return e;
}

/// A random instance from the shared generator, on a given side.
verify::Instance instance(std::uint64_t seed, std::size_t i, std::optional<Side> side = std::nullopt,
                          std::uint32_t p = 2) {
  return verify::gen_random_instance(seed, i, verify::Sizes{}, PrimeField(p), side);
}

}  // namespace

TEST(PpPairFunctor, TopBottomIsForgetful) {
  const auto a = keps();
  const Module r = free_module(a, Side::left, 1);
  EXPECT_EQ(eval_pp_pair(top_bottom(a, Side::left), r).dim(), 2u);
  EXPECT_EQ(annihilator_eval(top_bottom(a, Side::left), r).dim(), 2u);
}

TEST(PpPairFunctor, TopOverDivisibility) {
  const auto a = keps();
  const Module r = free_module(a, Side::left, 1);
  EXPECT_EQ(eval_pp_pair(top_div(a), r).dim(), 1u);
  EXPECT_EQ(annihilator_eval(top_div(a), r).dim(), 1u);
}

TEST(PpPairFunctor, DimensionMatchesEnumeration) {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto a = t % 2 ? keps() : algebras::linear_quiver(F2, 2);
    const PpPair pr = verify::random_pair(rng, a, Side::left, 3);
    const Module m = verify::random_module(rng, a, Side::left, 3);
    if (pr.phi().n() * m.dim() > 6) continue;
    const std::size_t brute =
        log_p(2, oracle::solution_set(pr.phi(), m).size()) - log_p(2, oracle::solution_set(pr.psi(), m).size());
    EXPECT_EQ(eval_pp_pair(pr, m).dim(), brute);
  }
}

TEST(Annihilator, DimensionAndPerfectPairing) {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t i = 0; i < 25; ++i) {
      const verify::Instance in = instance(100 + p, i, std::nullopt, p);
      const FunctorValue F = eval_pp_pair(in.pair, in.m), A = annihilator_eval(in.pair, in.m);
      EXPECT_EQ(F.dim(), A.dim());
      EXPECT_TRUE(is_nondegenerate(evaluation_pairing(F, A)));
    }
}

TEST(Annihilator, PairingIsNatural) {
  for (std::size_t i = 0; i < 20; ++i) {
    const verify::Instance in = instance(7, i);
    for (const auto& g : in.maps) {
      const FunctorValue FX = eval_pp_pair(in.pair, g.source()), FY = eval_pp_pair(in.pair, g.target());
      const FunctorValue AX = annihilator_eval(in.pair, g.source()), AY = annihilator_eval(in.pair, g.target());
      // <F(g) a, b> = <a, A(g) b>
      EXPECT_EQ(evaluation_pairing(FX, AX) * annihilator_map(in.pair, g, AX, AY),
                pp_pair_map(in.pair, g, FX, FY).transpose() * evaluation_pairing(FY, AY));
    }
  }
}

TEST(Functoriality, PpPairAndPresentationMapsCompose) {
  Rng rng(32);
  const auto a = algebras::linear_quiver(F2, 3);
  for (int t = 0; t < 10; ++t) {
    const PpPair pr = verify::random_pair(rng, a, Side::left, 4);
    const PairPresentation pres = pair_to_presentation(pr);
    const Module x = verify::random_module(rng, a, Side::left, 5), y = verify::random_module(rng, a, Side::left, 5),
                 z = verify::random_module(rng, a, Side::left, 5);
    const ModuleMap f = verify::random_map(rng, x, y), g = verify::random_map(rng, y, z);
    const FunctorValue fx = eval_pp_pair(pr, x), fy = eval_pp_pair(pr, y), fz = eval_pp_pair(pr, z);
    EXPECT_EQ(pp_pair_map(pr, g.after(f), fx, fz), pp_pair_map(pr, g, fy, fz) * pp_pair_map(pr, f, fx, fy));
    const FunctorValue px = eval_presentation(pres.functor, x), py = eval_presentation(pres.functor, y),
                       pz = eval_presentation(pres.functor, z);
    EXPECT_EQ(presentation_map(pres.functor, g.after(f), px, pz),
              presentation_map(pres.functor, g, py, pz) * presentation_map(pres.functor, f, px, py));
  }
}

TEST(Presentation, BridgeWitnessIsAnIsomorphism) {
  for (std::size_t i = 0; i < 30; ++i) {
    const verify::Instance in = instance(33, i);
    const PairPresentation pres = pair_to_presentation(in.pair);
    const FunctorValue pv = eval_presentation(pres.functor, in.m), qv = eval_pp_pair(in.pair, in.m);
    EXPECT_EQ(pv.dim(), qv.dim());
    EXPECT_TRUE(induces_isomorphism(pv, qv, tuple_evaluation(pres.phi_realization, in.pair.phi().n(), in.m)));
  }
}

TEST(Presentation, RepresentableIsHom) {
  Rng rng(34);
  const auto a = algebras::linear_quiver(F2, 3, true);
  for (int t = 0; t < 10; ++t) {
    const Module x = verify::random_module(rng, a, Side::left, 5), m = verify::random_module(rng, a, Side::left, 5);
    EXPECT_EQ(eval_presentation(representable(x), m).dim(), hom_space(x, m).dim());
  }
}

TEST(Presentation, SideMismatchThrows) {
  const auto a = keps();
  const PairPresentation pres = pair_to_presentation(top_div(a));
  EXPECT_THROW(eval_presentation(pres.functor, free_module(a, Side::right, 1)), Mismatch);
}

TEST(DualFunctor, DimensionsAgree) {
  for (std::size_t i = 0; i < 25; ++i) {
    const verify::Instance in = instance(35, i);
    const PairPresentation pres = pair_to_presentation(in.pair);
    EXPECT_EQ(dual_functor_eval(pres.functor, in.m).dim(), eval_pp_pair(in.pair, in.m).dim());
    const FunctorValue v = eval_pp_pair(in.pair, in.m);
    EXPECT_EQ(dual_value(dual_value(v)).total(), v.total());
    EXPECT_EQ(dual_value(dual_value(v)).relations(), v.relations());
  }
}

TEST(Predual, AnnihilatorEqualsPredualOfDualPair) {
  for (std::size_t i = 0; i < 25; ++i) {
    const verify::Instance in = instance(36, i);
    const PpPair dp = make_pair(dual_formula(in.pair.psi()), dual_formula(in.pair.phi()));
    const PairPresentation pres = pair_to_presentation(dp);
    EXPECT_EQ(predual_eval(pres.functor, in.m).dim(), annihilator_eval(in.pair, in.m).dim());
  }
}

TEST(Predual, RequiresOppositeSide) {
  const auto a = keps();
  const PairPresentation pres = pair_to_presentation(top_div(a));
  EXPECT_THROW(predual_eval(pres.functor, free_module(a, Side::left, 1)), Mismatch);
}

TEST(DFunctor, KEpsExample) {
  const auto a = keps();
  const PpPair pr = top_div(a);
  const PairPresentation pres = pair_to_presentation(pr);
  const PpPair dp = make_pair(dual_formula(pr.psi()), dual_formula(pr.phi()));
  for (const Module& n : {free_module(a, Side::right, 1), free_module(a, Side::right, 2)})
    EXPECT_EQ(d_functor_eval(pres.functor, n).dim(), eval_pp_pair(dp, n).dim());
}

TEST(DFunctor, MatchesDualPairOnRandomInstances) {
  for (std::size_t i = 0; i < 25; ++i) {
    const verify::Instance in = instance(37, i, Side::left);
    const PairPresentation pres = pair_to_presentation(in.pair);
    const PpPair dp = make_pair(dual_formula(in.pair.psi()), dual_formula(in.pair.phi()));
    EXPECT_EQ(d_functor_eval(pres.functor, in.other).dim(), eval_pp_pair(dp, in.other).dim());
  }
}

TEST(DFunctor, RepresentableGoesToTensor) {
  // d(A,-) = A (x) -, so (d(A,-))(N) = N (x) A when A -> 0 presents (A,-)
  Rng rng(38);
  const auto a = algebras::linear_quiver(F2, 2);
  for (int t = 0; t < 8; ++t) {
    const Module x = verify::random_module(rng, a, Side::left, 4), n = verify::random_module(rng, a, Side::right, 4);
    EXPECT_EQ(d_functor_eval(representable(x), n).dim(), tensor_over_R(n, x).dim());
  }
}

TEST(DFunctor, RejectsWrongSides) {
  const auto a = keps();
  const PairPresentation pres = pair_to_presentation(top_div(a));
  EXPECT_THROW(d_functor_eval(pres.functor, free_module(a, Side::left, 1)), Mismatch);
}

TEST(AnnihilatorPresentation, ContravariantDimension) {
  for (std::size_t i = 0; i < 20; ++i) {
    const verify::Instance in = instance(39, i);
    const FpFunctor g = annihilator_presentation(in.pair);
    EXPECT_EQ(g.variance, Variance::contravariant);
    EXPECT_EQ(eval_presentation(g, in.m).dim(), annihilator_eval(in.pair, in.m).dim());
  }
}

TEST(ZeroKernel, FAndAVanishTogether) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    const verify::Instance in = instance(40, i);
    const bool fz = eval_pp_pair(in.pair, in.m).dim() == 0, az = annihilator_eval(in.pair, in.m).dim() == 0;
    EXPECT_EQ(fz, az);
    zeros += fz;
  }
  EXPECT_GT(zeros, 0u);
}
