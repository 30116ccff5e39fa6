#include <gtest/gtest.h>

#include <numbers>

#include "rauzy/proofgeom.hpp"
#include "support.hpp"

namespace rauzy {
namespace {

using testing::q;

Rational shoelace(const std::vector<std::array<Rational, 2>>& v) {
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return abs(twice) / 2;
}

TEST(Quad, VerticesAndArea) {
  const Quad2D qd = build_qn(make_rvector({1, 1}), 1);
  EXPECT_EQ(qd.p, (RPoint{q(1, 2), q(3, 2)}));
  EXPECT_EQ(qd.q, (RPoint{q(3, 2), q(1, 2)}));
  EXPECT_EQ(qd.r, (RPoint{3, 1}));
  EXPECT_EQ(qd.s, (RPoint{1, 3}));
  EXPECT_EQ(area(qd.polygon()), 3);
  EXPECT_EQ(qn_area_formula(qd), 3);
  EXPECT_EQ(qn_area_formula(build_qn(make_rvector({1, 1}), 2)), q(5, 8));
  EXPECT_EQ(ball_ratio(qd), q(3, 4));
  EXPECT_THROW(build_qn(make_rvector({1, 1}), 0), DomainError);
  EXPECT_THROW(build_qn(make_rvector({0, 1}), 3), DomainError);
}

TEST(Quad, FormulaMatchesShoelaceOracle) {
  testing::Gen gen(71);
  for (int k = 0; k < 200; ++k) {
    const RVector l = make_rvector({gen.rational(1, 10), gen.rational(1, 10)});
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 40));
    Quad2D qd;
    try {
      qd = build_qn(l, n);
    } catch (const DomainError&) {
      continue;
    }
    const Rational h = 1 / Rational(2 * static_cast<long>(n));
    const Rational px = l(0) - h * l(1), py = l(1) + h * l(0);
    const Rational qx = l(0) + h * l(1), qy = l(1) - h * l(0);
    const Rational g = 1 + 1 / Rational(static_cast<long>(n));
    EXPECT_EQ(qn_area_formula(qd), shoelace({{px, py}, {qx, qy}, {g * qx, g * qy}, {g * px, g * py}}));
    EXPECT_LE(max_vertex_distance_squared(qd), ball_radius_squared(qd));
  }
}

TEST(Quad, ScalingAndLimit) {
  const Quad2D a = build_qn(make_rvector({2, 3}), 5);
  const Quad2D b = build_qn(make_rvector({6, 9}), 5);
  EXPECT_EQ(qn_area_formula(b), 9 * qn_area_formula(a));
  EXPECT_EQ(ball_ratio(a), ball_ratio(b));
  const double limit = 4.0 / (5.0 * std::numbers::pi);
  const double at = ball_ratio(build_qn(make_rvector({1, 1}), 10000)).get_d() / std::numbers::pi;
  EXPECT_NEAR(at, limit, 1e-3);
}

TEST(Trapezoid, TplusRatio) {
  EXPECT_EQ(tplus_ratio({1, 1}, {2, 2}), q(1, 2));
  EXPECT_EQ(tplus_ratio({1, 3}, {2, 6}), q(3, 4));
  EXPECT_THROW(tplus_ratio({1, 1}, {2, 3}), DomainError);
  EXPECT_THROW(tplus_ratio({2, 2}, {1, 1}), DomainError);
}

TEST(Trapezoid, TplusRatioMatchesPolygonOracle) {
  testing::Gen gen(72);
  for (int k = 0; k < 200; ++k) {
    const Rational b1 = gen.rational(0, 10), b2 = gen.rational(0, 10), d = gen.rational(0, 1);
    const Rational a1 = d * b1, a2 = d * b2;
    const Rational ia = a1 * a2 / (a1 + a2), ib = b1 * b2 / (b1 + b2);
    const Rational t = shoelace({{a1, 0}, {b1, 0}, {0, b2}, {0, a2}});
    const Rational tp = shoelace({{ia, ia}, {ib, ib}, {0, b2}, {0, a2}});
    EXPECT_EQ(tplus_ratio({a1, a2}, {b1, b2}), tp / t);
    EXPECT_EQ(area(trapezoid_plus({a1, a2}, {b1, b2})), tp);
  }
}

TEST(Trapezoid, EuclidIntersection) {
  const auto ok = check_euclid_intersection({q(1, 2), q(9, 2)}, {1, 9}, 1);
  EXPECT_TRUE(ok.ratio_bound);
  EXPECT_TRUE(ok.half_width);
  EXPECT_TRUE(ok.half_overlap);
  EXPECT_TRUE(ok.chain_holds());
  const auto weak = check_euclid_intersection({q(1, 2), 1}, {1, 2}, 1);
  EXPECT_FALSE(weak.ratio_bound);
  EXPECT_TRUE(weak.chain_holds());
  EXPECT_THROW(check_euclid_intersection({q(1, 3), 1}, {1, 3}, 1), DomainError);
}

TEST(Trapezoid, ChainSweep) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (long k = 1; k <= 120; ++k) {
      const Rational c = ratio(static_cast<unsigned long>(n), static_cast<unsigned long>(n + 1));
      const RPair beta{1, q(k, 4)};
      const auto r = check_euclid_intersection({c * beta[0], c * beta[1]}, beta, n);
      EXPECT_TRUE(r.chain_holds()) << n << " " << k;
      EXPECT_EQ(r.ratio_bound, beta[1] >= static_cast<long>(2 * n + 1));
      EXPECT_EQ(r.half_width, beta[0] * beta[1] / (beta[0] + beta[1]) >= (beta[0] + c * beta[0]) / 2);
    }
}

TEST(Slice, MeasureFormula) {
  EXPECT_EQ(slice_measure(canonical_slice({1, 1}, {2, 2})), q(3, 2));
  EXPECT_EQ(slice_measure(canonical_slice({1, 1, 1}, {2, 2, 2})), q(7, 6));
  EXPECT_THROW(canonical_slice({1, 1}, {2, 3}).delta(), DomainError);
  EXPECT_THROW(canonical_slice({2, 1}, {1, 3}), DomainError);
}

TEST(Slice, MeasureAgainstSampling) {
  std::mt19937_64 rng(73);
  for (int n = 2; n <= 4; ++n) {
    std::vector<Rational> alpha, beta;
    for (int i = 0; i < n; ++i) {
      beta.push_back(q(i + 2, 2));
      alpha.push_back(beta.back() * q(2, 3));
    }
    const Slice s = canonical_slice(alpha, beta);
    const int samples = 400000;
    int hits = 0;
    double box = 1;
    for (const auto& b : beta) box *= b.get_d();
    for (int k = 0; k < samples; ++k) {
      double outer = 0, inner = 0;
      for (int i = 0; i < n; ++i) {
        const double y = std::uniform_real_distribution<double>(0, beta[i].get_d())(rng);
        outer += y / beta[i].get_d();
        inner += y / alpha[i].get_d();
      }
      if (outer <= 1 && inner >= 1) ++hits;
    }
    const double p = slice_measure(s).get_d() / box;
    const double sigma = std::sqrt(p * (1 - p) / samples);
    EXPECT_NEAR(static_cast<double>(hits) / samples, p, 3 * sigma) << n;
    const auto mc = slice_volume_mc(s, {74, 100000, 2});
    EXPECT_TRUE(mc.consistent_with(slice_measure(s).get_d())) << n;
  }
}

TEST(Slice, PPlus) {
  const McConfig cfg{75, 100000, 2};
  const auto two = pplus_bound(canonical_slice({q(9, 2), q(1, 2)}, {9, 1}), 18, cfg);
  EXPECT_EQ(two.bound, q(9, 10));
  EXPECT_EQ(two.exact_ratio, q(9, 10));
  EXPECT_TRUE(two.exact_pass);
  EXPECT_TRUE(two.mc.consistent_with(0.9));
  const auto three = pplus_bound(canonical_slice({q(1, 2), 5, q(1, 2)}, {1, 10, 1}), 20, cfg);
  EXPECT_EQ(three.exact_ratio, q(10, 11));
  EXPECT_TRUE(three.mc_pass);
  EXPECT_TRUE(three.mc.consistent_with(10.0 / 11.0));
  EXPECT_THROW(pplus_bound(canonical_slice({q(1, 2), 5, q(1, 2)}, {1, 10, 1}), 21, cfg), DomainError);
}

TEST(Witness, Errors) {
  WitnessParams p;
  EXPECT_THROW(witness_intersection(make_rvector({1, 2}), 0, p), DomainError);
  EXPECT_THROW(witness_intersection(make_rvector({q(1, 20), 2}), q(1, 10), p), DomainError);
  EXPECT_THROW(witness_intersection(make_rvector({1, 2, 3}), q(1, 10), p), DimensionError);
}

TEST(Witness, SmallRunFindsOverlap) {
  WitnessParams p;
  p.N = 4;
  p.mc = {76, 20000, 2};
  const auto r = witness_intersection(make_rvector({1, q(89, 55)}), q(1, 10), p);
  ASSERT_TRUE(r.found_cone);
  EXPECT_TRUE(r.checks.ok());
  EXPECT_GT(r.exact_overlap_area, 0);
  EXPECT_TRUE(r.success());
  EXPECT_EQ(to_json(r)["found_cone"], true);
}

}  // namespace
}  // namespace rauzy
