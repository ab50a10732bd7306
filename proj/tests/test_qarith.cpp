#include "oracles.hpp"

#include "coverspec/bipoly.hpp"
#include "coverspec/error.hpp"
#include "coverspec/intmath.hpp"
#include "coverspec/poly.hpp"
#include "coverspec/quadext.hpp"
#include "coverspec/ratfunc.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace coverspec;

namespace {

PolyQ P(std::initializer_list<std::int64_t> c) {
  std::vector<RatQ> v;
  for (auto x : c) v.emplace_back(x);
  return PolyQ(v);
}

PolyQ random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<RatQ> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng), std::uniform_int_distribution<int>(1, 3)(rng));
  return PolyQ(c);
}

}  // namespace

TEST(Rational, NormalFormAndParse) {
  EXPECT_EQ(RatQ(6, 4), RatQ(3, 2));
  EXPECT_EQ(RatQ(3, -6), RatQ(-1, 2));
  EXPECT_EQ(RatQ::parse("-10/4"), RatQ(-5, 2));
  EXPECT_EQ(RatQ::parse("7"), RatQ(7));
  EXPECT_THROW(RatQ(1, 0), Error);
  EXPECT_THROW(RatQ::parse("1/x"), Error);
  EXPECT_EQ(RatQ(7, 2).floor(), 3);
  EXPECT_EQ(RatQ(7, 2).ceil(), 4);
  EXPECT_EQ(RatQ(-7, 2).ceil(), -3);
  EXPECT_EQ(RatQ(3, 4).to_string(), "3/4");
}

TEST(IntMath, FactorAndSquarePart) {
  EXPECT_TRUE(is_prime(19));
  EXPECT_FALSE(is_prime(91));
  const auto divs = divisors(BigInt(12));
  EXPECT_EQ(divs.size(), 6u);
  EXPECT_EQ(legendre(2, 19), -1);
  EXPECT_EQ(legendre(3, 19), -1);
  EXPECT_EQ(legendre(2, 7), 1);
}

TEST(Poly, DivmodReconstructs) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const PolyQ a = random_poly(rng, 5);
    PolyQ b = random_poly(rng, 2);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(Poly, GcdOfProducts) {
  const PolyQ common = P({-1, 0, 1});
  const PolyQ a = common * P({2, 1});
  const PolyQ b = common * P({-3, 0, 1});
  EXPECT_EQ(gcd(a, b), common);
  EXPECT_EQ(gcd(P({1, 1}), P({-1, 1})), PolyQ::constant(1));
}

TEST(Poly, SquarefreeDecompositionMultipliesBack) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    PolyQ f = PolyQ::constant(1);
    for (int i = 0; i < 3; ++i) {
      PolyQ factor = random_poly(rng, 1 + static_cast<int>(rng() % 2));
      if (factor.degree() <= 0) continue;
      f *= pow(factor, 1 + static_cast<unsigned>(rng() % 3));
    }
    if (f.degree() <= 0) continue;
    PolyQ back = PolyQ::constant(1);
    for (const auto& sf : squarefree_decomposition(f)) {
      EXPECT_EQ(gcd(sf.factor, sf.factor.derivative()).degree(), 0);
      back *= pow(sf.factor, sf.multiplicity);
    }
    EXPECT_EQ(back, f.monic());
  }
}

TEST(Poly, RationalRootsAgainstConstruction) {
  const PolyQ f = P({-1, 1}) * P({1, 2}) * P({3, -5}) * P({1, 0, 1});
  const auto roots = rational_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], RatQ(-1, 2));
  EXPECT_EQ(roots[1], RatQ(3, 5));
  EXPECT_EQ(roots[2], RatQ(1));
}

TEST(Poly, ResultantIsProductOfRootDifferences) {
  // Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j).
  const std::vector<RatQ> as = {RatQ(1), RatQ(-2), RatQ(1, 3)};
  const std::vector<RatQ> bs = {RatQ(4), RatQ(-1, 2)};
  PolyQ f = PolyQ::constant(1), g = PolyQ::constant(1);
  for (const auto& a : as) f *= PolyQ({-a, RatQ(1)});
  for (const auto& b : bs) g *= PolyQ({-b, RatQ(1)});
  RatQ expected(1);
  for (const auto& a : as)
    for (const auto& b : bs) expected *= a - b;
  EXPECT_EQ(resultant(f, g), expected);
}

TEST(Poly, InterpolationPassesThroughPoints) {
  const std::vector<RatQ> xs = {RatQ(0), RatQ(1), RatQ(-1), RatQ(1, 2)};
  const std::vector<RatQ> ys = {RatQ(3), RatQ(-2), RatQ(5, 3), RatQ(0)};
  const PolyQ p = interpolate(xs, ys);
  EXPECT_LE(p.degree(), 3);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(p(xs[i]), ys[i]);
}

TEST(RatFunc, ReducesAndKeepsDegree) {
  const RatFunc f(P({0, 0, 1}), P({1, -2, 2}));
  EXPECT_EQ(f.degree(), 2u);
  const RatFunc g(P({-1, 0, 1}), P({1, 1}));
  EXPECT_EQ(g.degree(), 1u);
  EXPECT_THROW(reduce_ratfunc(P({2, 2}), P({1, 1})), Error);
  EXPECT_EQ(f(P1Q(1)), P1Q(1));
  EXPECT_EQ(f(P1Q::infinity()), P1Q(RatQ(1, 2)));
}

TEST(RatFunc, ComposeEvaluatesPointwise) {
  const RatFunc f(P({1, 0, 1}), P({0, 1}));
  const RatFunc g = RatFunc::mobius(RatQ(2), RatQ(1), RatQ(1), RatQ(-1));
  const RatFunc h = f.compose(g);
  EXPECT_EQ(h.degree(), 2u);
  for (int u : {-3, 0, 2, 5}) EXPECT_EQ(h(P1Q(u)), f(g(P1Q(u))));
}

TEST(FiberProfile, WorkedExampleFibers) {
  const RatFunc t0(P({0, 0, 1}), P({1, -2, 2}));
  const auto over0 = fiber_profile(t0, P1Q(0)).multiplicity_counts();
  ASSERT_EQ(over0.size(), 1u);
  EXPECT_EQ(over0[0], std::make_pair(2u, 1u));
  const auto over1 = fiber_profile(t0, P1Q(1)).multiplicity_counts();
  ASSERT_EQ(over1.size(), 1u);
  EXPECT_EQ(over1[0], std::make_pair(2u, 1u));
  const auto overm1 = fiber_profile(t0, P1Q(-1));
  ASSERT_EQ(overm1.parts.size(), 1u);
  EXPECT_EQ(overm1.parts[0].multiplicity, 1u);
  EXPECT_EQ(overm1.parts[0].point_count, 2u);
  EXPECT_EQ(overm1.parts[0].factor.degree(), 2);
}

TEST(FiberProfile, MatchesDerivativeGcdOracle) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto inst = oracle::random_instance(rng, 4, 8, 6);
    for (const auto& t : *inst.data.branch_points) {
      std::multiset<unsigned> got;
      for (const auto& part : fiber_profile(inst.t0, t).parts)
        for (unsigned i = 0; i < part.point_count; ++i) got.insert(part.multiplicity);
      EXPECT_EQ(got, oracle::fiber_multiplicities(inst.t0, t)) << inst.t0.to_string() << " over " << t.to_string();
    }
  }
}

TEST(FiberProfile, RamificationWeightIsTwoNMinusTwo) {
  const RatFunc t0(P({0, 0, 1}), P({1, -2, 2}));
  EXPECT_EQ(global_ramification_weight(t0), 2u);
  const RatFunc cubic(P({1, 0, 0, 1}), P({0, 1}));
  EXPECT_EQ(global_ramification_weight(cubic), 4u);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    const auto inst = oracle::random_instance(rng, 1, 8, 6);
    EXPECT_EQ(global_ramification_weight(inst.t0), 2 * inst.t0.degree() - 2) << inst.t0.to_string();
  }
}

TEST(BiPoly, DiscriminantRootsGiveBranchPoints) {
  // Y^6 - T Y^3 + 1 and Y^4 + 2(1 - 2T) Y^2 + 1.
  BiPolyQ d6({P({1}), P({}), P({}), P({0, -1}), P({}), P({}), P({1})});
  const auto r6 = rational_roots(discriminant_y(d6));
  EXPECT_EQ(r6, (std::vector<RatQ>{RatQ(-2), RatQ(2)}));
  BiPolyQ klein({P({1}), P({}), P({2, -4}), P({}), P({1})});
  const auto r4 = rational_roots(discriminant_y(klein));
  EXPECT_EQ(r4, (std::vector<RatQ>{RatQ(0), RatQ(1)}));
}

TEST(QuadExt, FieldArithmetic) {
  const QuadExt a(-2, RatQ(1, 3), RatQ(1, 3));
  EXPECT_EQ(a * a.inverse(), QuadExt(-2, RatQ(1)));
  EXPECT_EQ(a * a.conjugate(), QuadExt(-2, a.norm()));
  EXPECT_EQ(a.norm(), RatQ(1, 3));
}

TEST(QuadExt, CrossRatioOrbits) {
  const auto src = cross_ratio_orbit(to_quad_point(P1Q(0)), to_quad_point(P1Q(1)), to_quad_point(P1Q(-1)),
                                     to_quad_point(P1Q(RatQ(1, 5))));
  EXPECT_NE(std::find(src.begin(), src.end(), QuadExt(-2, RatQ(-2))), src.end());
  const QuadPoint p1 = QuadExt(-2, RatQ(1, 3), RatQ(1, 3));
  const QuadPoint p2 = QuadExt(-2, RatQ(1, 3), RatQ(-1, 3));
  const auto orbit = cross_ratio_orbit(p1, p2, QuadExt(-2, RatQ(-1)), QuadExt(-2, RatQ(1, 3)));
  EXPECT_NE(std::find(orbit.begin(), orbit.end(), QuadExt(-2, RatQ(16, 9), RatQ(4, 9))), orbit.end());
  EXPECT_EQ(orbit.size(), 6u);
  EXPECT_THROW(cross_ratio(QuadExt(-2, RatQ(1)), QuadExt(-2, RatQ(1)), QuadExt(-2, RatQ(0)), std::nullopt), Error);
}

TEST(QuadExt, RootsOfQuadratic) {
  const auto roots = roots_degree_le2(P({1, -2, 3}).monic());
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_TRUE((QuadExt(r.d(), RatQ(3)) * r * r - QuadExt(r.d(), RatQ(2)) * r + QuadExt(r.d(), RatQ(1))).is_zero());
}
