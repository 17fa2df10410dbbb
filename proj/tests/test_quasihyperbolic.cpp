#include "hypermetric/errors.hpp"
#include "hypermetric/metrics.hpp"
#include "hypermetric/quasihyperbolic.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

using namespace hypermetric;

namespace {

// Composite Simpson rule.
double simpson(const std::function<double(double)>& f, double a, double b, int panels = 2000) {
    const double step = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        s += f(a + i * step) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return s * step / 3.0;
}

// Quasihyperbolic length of the half-plane geodesic: a vertical segment or a
// circular arc centred on the real axis.
double halfplane_geodesic_length(const Point& x, const Point& y) {
    if (std::abs(x[0] - y[0]) < 1e-14) {
        return simpson([](double t) { return 1.0 / t; }, std::min(x[1], y[1]), std::max(x[1], y[1]));
    }
    const double centre = (x.norm_squared() - y.norm_squared()) / (2.0 * (x[0] - y[0]));
    const double radius = std::hypot(x[0] - centre, x[1]);
    const double a = std::atan2(x[1], x[0] - centre);
    const double b = std::atan2(y[1], y[0] - centre);
    return simpson([&](double t) { return radius / (radius * std::sin(t)); }, std::min(a, b),
                   std::max(a, b));
}

// Quasihyperbolic length of the log spiral from x to y in the punctured plane, summed
// over a fine polyline with midpoint weights.
double punctured_spiral_length(const Point& x, const Point& y, int segments = 20000) {
    const double ax = std::atan2(x[1], x[0]);
    double theta = std::atan2(y[1], y[0]) - ax;
    if (theta > std::numbers::pi) {
        theta -= 2.0 * std::numbers::pi;
    } else if (theta < -std::numbers::pi) {
        theta += 2.0 * std::numbers::pi;
    }
    const double lr = std::log(y.norm() / x.norm());
    auto curve = [&](double t) {
        const double r = x.norm() * std::exp(t * lr);
        return Point{r * std::cos(ax + t * theta), r * std::sin(ax + t * theta)};
    };
    double total = 0.0;
    Point prev = curve(0.0);
    for (int i = 1; i <= segments; ++i) {
        const Point next = curve(static_cast<double>(i) / segments);
        total += distance(prev, next) / curve((i - 0.5) / segments).norm();
        prev = next;
    }
    return total;
}

} // namespace

TEST(KExact, ClosedFormExamples) {
    EXPECT_NEAR(k_exact_halfspace(Point{0.0, 1.0}, Point{0.0, 2.0}), 0.69314718055994531, 1e-15);
    EXPECT_NEAR(k_exact_halfspace(Point{0.0, 1.0}, Point{1.0, 1.0}), 0.96242365011920689, 1e-15);
    EXPECT_EQ(k_exact_halfspace(Point{0.0, 1.0}, Point{0.0, 1.0}), 0.0);
    EXPECT_NEAR(k_exact_punctured(Point{1.0, 0.0}, Point{0.0, 1.0}), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(k_exact_punctured(Point{1.0, 0.0}, Point{std::numbers::e, 0.0}), 1.0, 1e-15);
    EXPECT_EQ(k_exact_punctured(Point{1.0, 0.0}, Point{1.0, 0.0}), 0.0);
    EXPECT_NEAR(k_exact_punctured(Point{1.0, 0.0, 0.0}, Point{0.0, 0.0, 2.0}),
                std::hypot(std::numbers::pi / 2, std::log(2.0)), 1e-15);
}

TEST(KExact, AgreesWithGeodesicQuadrature) {
    const auto half = sample_interior(HalfSpace{2}, 400, 41, 0.05);
    for (std::size_t i = 0; i + 1 < half.size(); i += 2) {
        const double k = k_exact_halfspace(half[i], half[i + 1]);
        EXPECT_NEAR(halfplane_geodesic_length(half[i], half[i + 1]), k, 1e-8 * std::max(1.0, k));
    }
    const auto punct = sample_interior(PuncturedSpace{2}, 400, 42, 0.05);
    for (std::size_t i = 0; i + 1 < punct.size(); i += 2) {
        const double k = k_exact_punctured(punct[i], punct[i + 1]);
        EXPECT_NEAR(punctured_spiral_length(punct[i], punct[i + 1]), k, 1e-7 * std::max(1.0, k));
    }
}

TEST(KEstimate, ReferenceExamplesWithinOnePercent) {
    const auto half = k_estimate(HalfSpace{2}, Point{0.0, 1.0}, Point{1.0, 1.0});
    EXPECT_NEAR(half.value, 0.96242365011920689, 0.01 * 0.96242365011920689);
    EXPECT_EQ(half.refinement_history.size(), 3u);
    EXPECT_DOUBLE_EQ(half.spacing, 0.0125);

    const auto punct = k_estimate(PuncturedSpace{2}, Point{1.0, 0.0}, Point{0.0, 1.0});
    EXPECT_NEAR(punct.value, std::numbers::pi / 2, 0.01 * std::numbers::pi / 2);

    EXPECT_EQ(k_estimate(HalfSpace{2}, Point{0.3, 0.4}, Point{0.3, 0.4}).value, 0.0);
}

TEST(KEstimate, RadialPairInBall) {
    // the radius is a quasihyperbolic geodesic: k = log(1/(1 - 0.5))
    const auto k = k_estimate(UnitBall{2}, Point{0.0, 0.0}, Point{0.0, 0.5});
    EXPECT_NEAR(k.value, std::log(2.0), 0.01 * std::log(2.0));
}

TEST(KEstimate, IntervalIsExactIntegral) {
    // on (0,1), k(0.2, 0.7) = int_0.2^0.5 dt/t + int_0.5^0.7 dt/(1-t)
    const double exact = std::log(0.5 / 0.2) + std::log(0.5 / 0.3);
    EXPECT_NEAR(k_estimate(Interval{0.0, 1.0}, Point{0.2}, Point{0.7}).value, exact, 0.005 * exact);
}

TEST(KEstimate, ThreeDimensionalHalfSpace) {
    const Point x{0.0, 0.0, 1.0};
    const Point y{0.6, -0.3, 0.7};
    const double exact = k_exact_halfspace(x, y);
    EXPECT_NEAR(k_estimate(HalfSpace{3}, x, y).value, exact, 0.01 * exact);
}

TEST(KEstimate, ErrorDecreasesAndStaysBelowOnePercent) {
    const auto pts = sample_interior(HalfSpace{2}, 40, 43, 0.2);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        const auto est = k_estimate(HalfSpace{2}, pts[i], pts[i + 1]);
        const double exact = k_exact_halfspace(pts[i], pts[i + 1]);
        const auto& h = est.refinement_history;
        ASSERT_EQ(h.size(), 3u);
        const double coarse = std::abs(h.front().second - exact);
        const double fine = std::abs(h.back().second - exact);
        EXPECT_LE(fine, coarse + 1e-12);
        EXPECT_LT(fine / exact, 0.01);
    }
    const auto punct = sample_interior(PuncturedSpace{2}, 20, 44, 0.2);
    for (std::size_t i = 0; i + 1 < punct.size(); i += 2) {
        const double exact = k_exact_punctured(punct[i], punct[i + 1]);
        EXPECT_LT(std::abs(k_estimate(PuncturedSpace{2}, punct[i], punct[i + 1]).value - exact) / exact,
                  0.01);
    }
}

TEST(KEstimate, SymmetricBitwise) {
    const auto pts = sample_interior(UnitBall{2}, 10, 45, 0.2);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        EXPECT_EQ(k_estimate(UnitBall{2}, pts[i], pts[i + 1]).value,
                  k_estimate(UnitBall{2}, pts[i + 1], pts[i]).value);
    }
}

TEST(KEstimate, AtLeastJ) {
    for (const DomainSpec& d : {DomainSpec(UnitBall{2}), DomainSpec(HalfSpace{2}),
                                DomainSpec(PuncturedSpace{2})}) {
        const auto pts = sample_interior(d, 20, 46, 0.2);
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            const double j = j_metric(d, pts[i], pts[i + 1]);
            EXPECT_GE(k_estimate(d, pts[i], pts[i + 1]).value, j * (1.0 - 0.02));
        }
    }
}

TEST(KEstimate, QueryTimeBudget) {
    const auto t0 = std::chrono::steady_clock::now();
    (void)k_estimate(PuncturedSpace{2}, Point{1.9, 1.9}, Point{-0.2, 0.05});
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
}

TEST(KEstimate, ControlsAndErrors) {
    KControls tiny;
    tiny.node_cap = 100;
    EXPECT_THROW((void)k_estimate(UnitBall{2}, Point{0.0, 0.0}, Point{0.5, 0.0}, tiny),
                 ResourceExceeded);
    KControls bad;
    bad.initial_spacing = -1.0;
    EXPECT_THROW((void)k_estimate(UnitBall{2}, Point{0.0, 0.0}, Point{0.5, 0.0}, bad),
                 InvalidArgument);
    bad = KControls{};
    bad.refinements = -1;
    EXPECT_THROW((void)k_estimate(UnitBall{2}, Point{0.0, 0.0}, Point{0.5, 0.0}, bad),
                 InvalidArgument);
    EXPECT_THROW((void)k_estimate(UnitBall{4}, origin(4), axis_point(4, 0, 0.5)), InvalidArgument);
    EXPECT_THROW((void)k_estimate(UnitBall{2}, Point{0.0, 0.0}, Point{1.5, 0.0}), OutsideDomain);
}

TEST(GeodesicGrid, StructureAndWeights) {
    const GeodesicGrid grid(UnitBall{2}, Point{0.0, 0.0}, Point{0.5, 0.0}, 0.1, KControls{});
    EXPECT_GT(grid.node_count(), 0u);
    EXPECT_LE(grid.node_count(), grid.lattice_size());
    std::size_t checked = 0;
    for (std::size_t i = 0; i < grid.lattice_size() && checked < 50; ++i) {
        if (!grid.is_node(i)) {
            continue;
        }
        ++checked;
        const Point p = grid.node_point(i);
        EXPECT_GE(boundary_distance(UnitBall{2}, p), 0.05 - 1e-12);
        grid.for_each_edge(i, [&](std::size_t j, double w) {
            const Point q = grid.node_point(j);
            const double expected = 0.5 * distance(p, q) *
                                    (1.0 / boundary_distance(UnitBall{2}, p) +
                                     1.0 / boundary_distance(UnitBall{2}, q));
            EXPECT_NEAR(w, expected, 1e-12 * expected);
        });
    }
    EXPECT_EQ(checked, 50u);
}

TEST(GeodesicGrid, StencilDefaults) {
    EXPECT_EQ(default_stencil_radius(1), 1);
    EXPECT_EQ(default_stencil_radius(2), 4);
    EXPECT_EQ(default_stencil_radius(3), 2);
}
