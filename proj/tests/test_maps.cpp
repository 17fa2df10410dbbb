#include "hypermetric/errors.hpp"
#include "hypermetric/maps.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hypermetric;

namespace {

// Ratio of singular values of the central-difference Jacobian of a planar map.
double jacobian_dilatation(const SampleMap& map, const Point& z, double step = 1e-6) {
    const Point dx = (0.5 / step) * (apply_map(map, z + Point{step, 0.0}) -
                                     apply_map(map, z - Point{step, 0.0}));
    const Point dy = (0.5 / step) * (apply_map(map, z + Point{0.0, step}) -
                                     apply_map(map, z - Point{0.0, step}));
    const double a = dx[0], b = dy[0], c = dx[1], d = dy[1];
    const double frob = a * a + b * b + c * c + d * d;
    const double det = std::abs(a * d - b * c);
    const double root = std::sqrt(frob * frob - 4.0 * det * det);
    return std::sqrt((frob + root) / (frob - root));
}

const std::vector<double> kRadii{1e-1, 1e-2, 1e-3};

} // namespace

TEST(SampleMap, ApplyExamples) {
    const auto stretch = SampleMap::radial_stretch(2.0, 2);
    EXPECT_EQ(apply_map(stretch, Point{0.5, 0.0}), (Point{0.25, 0.0}));
    EXPECT_EQ(apply_map(stretch, Point{0.0, 0.0}), (Point{0.0, 0.0}));
    const auto flat = SampleMap::radial_stretch(1.0, 2);
    for (const auto& p : sample_interior(UnitBall{2}, 200, 51)) {
        EXPECT_EQ(apply_map(flat, p), p);
        EXPECT_EQ(apply_map(SampleMap::identity(UnitBall{2}), p), p);
    }
    EXPECT_THROW((void)apply_map(stretch, Point{1.5, 0.0}), OutsideDomain);
    EXPECT_THROW((void)SampleMap::radial_stretch(0.0, 2), InvalidArgument);
    EXPECT_THROW((void)SampleMap::moebius(IdentityMap{}), InvalidArgument);
    EXPECT_EQ(SampleMap::moebius(BallToHalfSpace{3}).target(), DomainSpec(HalfSpace{3}));
}

TEST(LinearDilatation, IdentityIsExactlyOne) {
    const auto e = linear_dilatation(SampleMap::identity(UnitBall{2}), Point{0.2, -0.3}, kRadii, 64, 1);
    for (double r : e.ratios) {
        EXPECT_NEAR(r, 1.0, 1e-12);
    }
    const auto e3 = linear_dilatation(SampleMap::identity(HalfSpace{3}), Point{0.2, -0.3, 0.5}, kRadii, 64, 1);
    EXPECT_NEAR(e3.H_hat, 1.0, 1e-12);
}

TEST(LinearDilatation, MoebiusMatchesDerivedFiniteRadiusRatio) {
    const auto map = SampleMap::moebius(ball_automorphism(Point{0.5, 0.0}));
    const auto e = linear_dilatation(map, Point{0.0, 0.0}, kRadii, 64, 1);
    ASSERT_EQ(e.ratios.size(), 3u);
    // sphere_ratio in tests/oracles/derive_values.py; equals (1 + r/2) / (1 - r/2)
    EXPECT_NEAR(e.H_hat, 1.0010005002501251, 1e-12);
    EXPECT_GT(e.ratios[0], e.ratios[1]);
    EXPECT_GT(e.ratios[1], e.ratios[2]);
    EXPECT_GE(e.H_hat, 1.0);
}

TEST(LinearDilatation, MoebiusConvergesToOneLinearlyInRadius) {
    const std::vector<SampleMap> maps{SampleMap::moebius(ball_automorphism(Point{-0.3, 0.4})),
                                      SampleMap::moebius(BallToHalfSpace{2})};
    for (const auto& map : maps) {
        const auto e = linear_dilatation(map, Point{0.2, 0.1}, {1e-2, 1e-3, 1e-4, 1e-5}, 64, 1);
        for (std::size_t i = 1; i < e.ratios.size(); ++i) {
            EXPECT_NEAR((e.ratios[i] - 1.0) / (e.ratios[i - 1] - 1.0), 0.1, 0.01);
        }
        EXPECT_NEAR(e.H_hat, 1.0, 1e-4);
        EXPECT_NEAR(jacobian_dilatation(map, Point{0.2, 0.1}), 1.0, 1e-6);
    }
}

TEST(LinearDilatation, MoebiusThreeDimensional) {
    const auto map = SampleMap::moebius(ball_automorphism(Point{0.1, 0.2, -0.3}));
    const auto e = linear_dilatation(map, Point{0.0, 0.3, 0.1}, {1e-3, 1e-5}, 64, 2);
    EXPECT_NEAR(e.H_hat, 1.0, 1e-4);
}

TEST(LinearDilatation, RadialStretchConvergesToJacobianRatio) {
    const auto map = SampleMap::radial_stretch(2.0, 2);
    const Point z{0.5, 0.0};
    const double limit = jacobian_dilatation(map, z);
    EXPECT_NEAR(limit, 2.0, 1e-6);
    const auto e = linear_dilatation(map, z, kRadii, 64, 1);
    EXPECT_NEAR(e.H_hat, 2.0019949950207707, 1e-10);
    EXPECT_GT(e.H_hat, 1.0);
    EXPECT_LT(std::abs(e.ratios[2] - limit), std::abs(e.ratios[1] - limit));
    EXPECT_LT(std::abs(e.ratios[1] - limit), std::abs(e.ratios[0] - limit));
}

TEST(LinearDilatation, Errors) {
    const auto map = SampleMap::identity(UnitBall{2});
    EXPECT_THROW((void)linear_dilatation(map, Point{0.0, 0.0}, {}, 64, 1), InvalidArgument);
    EXPECT_THROW((void)linear_dilatation(map, Point{0.0, 0.0}, kRadii, 8, 1), InvalidArgument);
    EXPECT_THROW((void)linear_dilatation(map, Point{0.0, 0.0}, {1e-3, 1e-2}, 64, 1), InvalidArgument);
    EXPECT_THROW((void)linear_dilatation(map, Point{0.95, 0.0}, {0.1}, 64, 1), InvalidArgument);
    // f collapses the sphere of radius 1e-200 around the origin onto f(0)
    const auto crush = SampleMap::radial_stretch(3.0, 2);
    EXPECT_THROW((void)linear_dilatation(crush, Point{0.0, 0.0}, {1e-200}, 64, 1),
                 DegenerateConfiguration);
}

TEST(Bilipschitz, IdentityAndMoebius) {
    const MetricParams c2(2.0);
    EXPECT_NEAR(bilipschitz_estimate(SampleMap::identity(UnitBall{2}), c2, 2000, 1).L_hat, 1.0, 1e-12);
    const auto g = bilipschitz_estimate(SampleMap::moebius(ball_automorphism(Point{0.5, 0.0})), c2,
                                        10'000, 1);
    EXPECT_LE(g.L_hat, 2.0 + 1e-9);
    EXPECT_GE(g.L_hat, 1.0);
    EXPECT_EQ(g.pair_count, 10'000u);
}

TEST(Bilipschitz, RadialStretchBoundsDilatation) {
    const auto map = SampleMap::radial_stretch(2.0, 2);
    const auto b = bilipschitz_estimate(map, MetricParams(2.0), 10'000, 3);
    EXPECT_TRUE(std::isfinite(b.L_hat));
    EXPECT_GT(b.L_hat, 1.0);
    for (const Point& z : {Point{0.5, 0.0}, Point{0.1, 0.3}, Point{-0.6, -0.2}}) {
        EXPECT_LE(linear_dilatation(map, z, kRadii, 64, 1).H_hat, b.L_hat * b.L_hat + 5e-2);
    }
}

TEST(UQuantity, ExamplesAndIndependenceOfC) {
    EXPECT_EQ(u_quantity(UnitBall{2}, MetricParams(2.0), Point{0.1, 0.1}, Point{0.1, 0.1}), 0.0);
    EXPECT_NEAR(u_quantity(UnitBall{2}, MetricParams(2.0), Point{0.0, 0.0}, Point{0.5, 0.0}),
                0.70710678118654752, 1e-15);
    EXPECT_NEAR(u_quantity(HalfSpace{2}, MetricParams(5.0), Point{0.0, 1.0}, Point{0.0, 2.0}),
                0.70710678118654752, 1e-15);
    const auto pts = sample_interior(HalfSpace{2}, 2000, 52);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        const double u1 = u_quantity(HalfSpace{2}, MetricParams(1.0), pts[i], pts[i + 1]);
        for (double c : {2.0, 5.0}) {
            EXPECT_NEAR(u_quantity(HalfSpace{2}, MetricParams(c), pts[i], pts[i + 1]), u1,
                        1e-12 * std::max(1.0, u1));
        }
    }
}

TEST(SpherePairBracket, ContainsH) {
    const double t = 0.1;
    for (double c : {1.0, 2.0, 5.0}) {
        const MetricParams params(c);
        const auto [lo, hi] = sphere_pair_bracket(params, t);
        for (const DomainSpec& d : {DomainSpec(UnitBall{2}), DomainSpec(HalfSpace{2}),
                                    DomainSpec(PuncturedSpace{2})}) {
            const auto centres = sample_interior(d, 200, 53, 0.01);
            for (std::size_t i = 0; i < centres.size(); ++i) {
                const Point& z = centres[i];
                const double r = t * boundary_distance(d, z);
                const double a = 0.1 * static_cast<double>(i);
                const Point x = z + r * Point{std::cos(a), std::sin(a)};
                const Point y = z + r * Point{std::cos(a + std::numbers::pi / 3), std::sin(a + std::numbers::pi / 3)};
                const double h = h_metric(d, params, x, y);
                EXPECT_LE(lo, h + 1e-12);
                EXPECT_LE(h, hi + 1e-12);
            }
        }
    }
    EXPECT_THROW((void)sphere_pair_bracket(MetricParams(2.0), 1.0), InvalidArgument);
}

TEST(SpherePairBracket, SquareRootBracketFailsAtBallCentre) {
    // x, y at distance 0.1 from the centre and from each other: d(x) = d(y) = 0.9
    const Point x{0.1, 0.0};
    const Point y{0.05, 0.1 * std::sqrt(3.0) / 2.0};
    const double h = h_metric(UnitBall{2}, MetricParams(2.0), x, y);
    EXPECT_NEAR(h, 0.20067069546215116, 1e-14);
    EXPECT_GT(h, std::log1p(2.0 * 0.1 / std::sqrt(1.0 - 0.1)));
    const auto [lo, hi] = sphere_pair_bracket(MetricParams(2.0), 0.1);
    EXPECT_LE(lo, h);
    EXPECT_LE(h, hi);
}
