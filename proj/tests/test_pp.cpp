#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ppfun/pp.hpp"
#include "ppfun/verify.hpp"

using namespace ppfun;
using verify::Rng;

namespace {

const PrimeField F2(2);

AlgebraPtr keps() { return algebras::dual_numbers(F2); }

Vec el(const Algebra& a, const std::string& label) { return a.basis_element(*a.label_index(label)); }

std::vector<AlgebraPtr> algebras_for(PrimeField f) {
  return {algebras::field(f), algebras::dual_numbers(f), algebras::linear_quiver(f, 2), algebras::square_zero_plane(f),
          algebras::linear_quiver(f, 3, true)};
}

}  // namespace

TEST(Parse, ExistentialDivisibility) {
  const auto a = keps();
  const PpFormula phi = parse_pp("E y1. x1 = eps*y1", a, Side::left);
  EXPECT_EQ(phi.n(), 1u);
  EXPECT_EQ(phi.m(), 1u);
  ASSERT_EQ(phi.l(), 1u);
  EXPECT_EQ(phi.A().at(0, 0), a->unit());
  EXPECT_EQ(phi.B().at(0, 0), el(*a, "eps"));
}

TEST(Parse, ZeroFormula) {
  const PpFormula phi = parse_pp("x1 = 0", keps(), Side::left);
  EXPECT_EQ(phi.n(), 1u);
  EXPECT_EQ(phi.m(), 0u);
  EXPECT_EQ(phi.l(), 1u);
  EXPECT_EQ(phi, PpFormula::zero(keps(), Side::left, 1));
}

TEST(Parse, TwoEquations) {
  const auto a = keps();
  const PpFormula phi = parse_pp("E y1 y2. x1 + x2 = y1 & eps*x1 = y2", a, Side::left);
  EXPECT_EQ(phi.l(), 2u);
  EXPECT_EQ(phi.n(), 2u);
  EXPECT_EQ(phi.m(), 2u);
  EXPECT_EQ(phi.A().at(1, 0), el(*a, "eps"));
  EXPECT_EQ(phi.A().at(1, 1), a->zero());
}

TEST(Parse, TautologyDropsItsRow) {
  const PpFormula phi = parse_pp("x1 = x1", keps(), Side::left);
  EXPECT_EQ(phi, PpFormula::tautology(keps(), Side::left, 1));
}

TEST(Parse, RightCoefficientsFollowTheVariable) {
  const auto a = keps();
  const PpFormula phi = parse_pp("E y1. x1 = y1*eps", a, Side::right);
  EXPECT_EQ(phi.B().at(0, 0), el(*a, "eps"));
  EXPECT_THROW(parse_pp("E y1. x1 = eps*y1", a, Side::right), ParseError);
}

TEST(Parse, ScalarsOverGF3) {
  const auto a = algebras::dual_numbers(PrimeField(3));
  const PpFormula phi = parse_pp("2*x1 - x2 = 0", a, Side::left);
  EXPECT_EQ(phi.A().at(0, 0), (Vec{2, 0}));
  EXPECT_EQ(phi.A().at(0, 1), (Vec{2, 0}));
}

TEST(Parse, Errors) {
  const auto a = keps();
  auto position = [&](const std::string& text) -> std::size_t {
    try {
      parse_pp(text, a, Side::left);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 9999;
  };
  EXPECT_EQ(position("E y1. x1 = foo*y1"), 11u);  // unknown basis symbol
  EXPECT_EQ(position("x1 = y1"), 5u);             // unquantified bound variable
  EXPECT_EQ(position("x1 = "), 5u);
  EXPECT_EQ(position("x1 x2"), 3u);
  EXPECT_EQ(position("E x1. x1 = 0"), 2u);
  EXPECT_THROW(parse_pp("x3 = 0", a, Side::left, 2), ParseError);
}

TEST(Unparse, RoundTripsRandomFormulas) {
  for (std::uint32_t p : {2u, 3u}) {
    Rng rng(p);
    for (const auto& a : algebras_for(PrimeField(p)))
      for (Side s : {Side::left, Side::right})
        for (int t = 0; t < 20; ++t) {
          const PpFormula phi = verify::random_formula(rng, a, s, 1 + rng.below(2), 4);
          const std::string text = unparse_pp(phi);
          EXPECT_EQ(parse_pp(text, a, s, phi.n()), phi) << text;
        }
  }
}

TEST(SolutionSet, Examples) {
  const auto a = keps();
  const Module r = free_module(a, Side::left, 1);
  EXPECT_EQ(solution_set(parse_pp("x1 = x1", a, Side::left), r).dim(), 2u);
  EXPECT_EQ(solution_set(parse_pp("x1 = 0", a, Side::left), r).dim(), 0u);
  const Subspace div = solution_set(parse_pp("E y1. x1 = eps*y1", a, Side::left), r);
  EXPECT_EQ(div, Subspace::span(F2, 2, {el(*a, "eps")}));
}

TEST(SolutionSet, SideMismatchThrows) {
  const auto a = keps();
  EXPECT_THROW(solution_set(parse_pp("x1 = 0", a, Side::left), free_module(a, Side::right, 1)), Mismatch);
}

TEST(SolutionSet, MatchesExhaustiveEnumeration) {
  // p = 2, dim M <= 3, n + m <= 3
  Rng rng(21);
  std::size_t cases = 0, proper = 0;
  for (const auto& a : algebras_for(F2))
    for (Side s : {Side::left, Side::right})
      for (int t = 0; t < 8; ++t) {
        const Module m = verify::random_module(rng, a, s, 3);
        const std::size_t n = 1 + rng.below(2);
        const PpFormula phi = verify::random_formula(rng, a, s, n, 3);
        const Subspace sol = solution_set(phi, m);
        EXPECT_EQ(oracle::elements(sol), oracle::solution_set(phi, m)) << unparse_pp(phi);
        ++cases;
        if (sol.dim() > 0 && sol.dim() < sol.ambient_dim()) ++proper;
      }
  EXPECT_GE(cases, 30u);
  EXPECT_GT(proper, 5u);
}

TEST(SolutionSet, MatchesEnumerationOverGF3) {
  Rng rng(22);
  const PrimeField f(3);
  for (const auto& a : {algebras::dual_numbers(f), algebras::linear_quiver(f, 2)})
    for (int t = 0; t < 10; ++t) {
      const Module m = verify::random_module(rng, a, Side::left, 2);
      const PpFormula phi = verify::random_formula(rng, a, Side::left, 1, 2);
      EXPECT_EQ(oracle::elements(solution_set(phi, m)), oracle::solution_set(phi, m));
    }
}

TEST(SolutionSet, PreservedByModuleMaps) {
  Rng rng(23);
  for (const auto& a : algebras_for(F2))
    for (int t = 0; t < 10; ++t) {
      const Module x = verify::random_module(rng, a, Side::left, 6), y = verify::random_module(rng, a, Side::left, 6);
      const ModuleMap g = verify::random_map(rng, x, y);
      const PpFormula phi = verify::random_formula(rng, a, Side::left, 2, 4);
      const Subspace sx = solution_set(phi, x), sy = solution_set(phi, y);
      for (const auto& v : sx.vectors()) EXPECT_TRUE(sy.contains(map_tuple(g, v)));
    }
}

TEST(FreeRealization, ImageOfEvaluationIsTheSolutionSet) {
  Rng rng(24);
  for (const auto& a : algebras_for(F2))
    for (int t = 0; t < 10; ++t) {
      const PpFormula phi = verify::random_formula(rng, a, Side::left, 1 + rng.below(2), 4);
      const FreeRealization fr = free_realization(phi);
      EXPECT_TRUE(solution_set(phi, fr.module).contains(fr.tuple));
      for (int k = 0; k < 3; ++k) {
        const Module m = verify::random_module(rng, a, Side::left, 6);
        EXPECT_EQ(realized_solution_set(fr, phi.n(), m), solution_set(phi, m));
      }
    }
}

TEST(FreeRealization, TautologyIsFreeOfRankOne) {
  const auto a = keps();
  const FreeRealization fr = free_realization(PpFormula::tautology(a, Side::left, 1));
  EXPECT_EQ(fr.module.dim(), a->dim());
  EXPECT_EQ(fr.tuple, a->unit());
}

TEST(Implies, Examples) {
  const auto a = keps();
  const PpFormula top = parse_pp("x1 = x1", a, Side::left), bottom = parse_pp("x1 = 0", a, Side::left);
  const PpFormula div = parse_pp("E y1. x1 = eps*y1", a, Side::left);
  EXPECT_TRUE(implies(div, div));
  EXPECT_TRUE(implies(bottom, top));
  EXPECT_FALSE(implies(top, div));
  EXPECT_TRUE(implies(div, top));
  EXPECT_THROW(implies(top, PpFormula::tautology(a, Side::left, 2)), DimensionMismatch);
}

TEST(Implies, AgreesWithSampledModules) {
  // implies is decided on the free realization; sampled modules can only falsify
  Rng rng(25);
  std::size_t yes = 0, no = 0;
  for (const auto& a : algebras_for(F2))
    for (int t = 0; t < 20; ++t) {
      const PpFormula phi = verify::random_formula(rng, a, Side::left, 1, 3);
      const PpFormula psi = verify::random_formula(rng, a, Side::left, 1, 3);
      if (implies(phi, psi)) {
        ++yes;
        for (int k = 0; k < 5; ++k) {
          const Module m = verify::random_module(rng, a, Side::left, 5);
          EXPECT_TRUE(solution_set(psi, m).contains(solution_set(phi, m)));
        }
      } else {
        ++no;
        const FreeRealization fr = free_realization(phi);
        EXPECT_FALSE(solution_set(psi, fr.module).contains(fr.tuple));
      }
    }
  EXPECT_GT(yes, 0u);
  EXPECT_GT(no, 0u);
}

TEST(Dual, Examples) {
  const auto a = keps();
  const PpFormula bottom = parse_pp("x1 = 0", a, Side::left), top = parse_pp("x1 = x1", a, Side::left);
  const PpFormula div = parse_pp("E y1. x1 = eps*y1", a, Side::left);
  EXPECT_EQ(dual_formula(bottom).side(), Side::right);
  EXPECT_EQ(unparse_pp(simplify(dual_formula(bottom))), "x1 = x1");
  EXPECT_EQ(unparse_pp(simplify(dual_formula(top))), "x1 = 0");
  EXPECT_EQ(unparse_pp(simplify(dual_formula(div))), "x1*eps = 0");
  const Module r = free_module(a, Side::right, 1);
  EXPECT_EQ(solution_set(dual_formula(div), r).dim(), 1u);
}

TEST(Dual, InvolutionAndOrderReversal) {
  for (std::uint32_t p : {2u, 3u}) {
    Rng rng(26 + p);
    for (const auto& a : algebras_for(PrimeField(p)))
      for (Side s : {Side::left, Side::right})
        for (int t = 0; t < 8; ++t) {
          const PpFormula phi = verify::random_formula(rng, a, s, 1 + rng.below(2), 4);
          const PpFormula psi = verify::random_formula(rng, a, s, phi.n(), 4);
          const PpFormula dd = dual_formula(dual_formula(phi));
          EXPECT_EQ(dd.side(), s);
          for (int k = 0; k < 3; ++k) {
            const Module m = verify::random_module(rng, a, s, 5);
            EXPECT_EQ(solution_set(dd, m), solution_set(phi, m));
          }
          EXPECT_EQ(implies(psi, phi), implies(dual_formula(phi), dual_formula(psi)));
        }
  }
}

TEST(Simplify, PreservesSolutionSets) {
  Rng rng(27);
  for (const auto& a : algebras_for(F2))
    for (Side s : {Side::left, Side::right})
      for (int t = 0; t < 10; ++t) {
        const PpFormula phi = dual_formula(verify::random_formula(rng, a, opposite(s), 1 + rng.below(2), 4));
        const PpFormula sp = simplify(phi);
        EXPECT_LE(sp.m(), phi.m());
        for (int k = 0; k < 3; ++k) {
          const Module m = verify::random_module(rng, a, s, 5);
          EXPECT_EQ(solution_set(sp, m), solution_set(phi, m));
        }
      }
}

TEST(Conjunction, IntersectsSolutionSets) {
  Rng rng(28);
  for (const auto& a : algebras_for(F2))
    for (int t = 0; t < 10; ++t) {
      const PpFormula phi = verify::random_formula(rng, a, Side::left, 2, 4);
      const PpFormula psi = verify::random_formula(rng, a, Side::left, 2, 4);
      const Module m = verify::random_module(rng, a, Side::left, 5);
      EXPECT_EQ(solution_set(conjunction(phi, psi), m), solution_set(phi, m).intersect(solution_set(psi, m)));
      EXPECT_TRUE(implies(conjunction(phi, psi), phi));
    }
}

TEST(Pair, RejectsNonImplication) {
  const auto a = keps();
  const PpFormula top = parse_pp("x1 = x1", a, Side::left), bottom = parse_pp("x1 = 0", a, Side::left);
  EXPECT_NO_THROW(make_pair(top, bottom));
  EXPECT_THROW(make_pair(bottom, top), NotAPair);
}

TEST(Pair, RandomPairsAreOrdered) {
  Rng rng(29);
  for (const auto& a : algebras_for(F2))
    for (int t = 0; t < 10; ++t) {
      const PpPair pr = verify::random_pair(rng, a, Side::left, 4);
      EXPECT_TRUE(implies(pr.psi(), pr.phi()));
      const Module m = verify::random_module(rng, a, Side::left, 6);
      EXPECT_TRUE(solution_set(pr.phi(), m).contains(solution_set(pr.psi(), m)));
    }
}
