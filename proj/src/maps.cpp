#include "hypermetric/maps.hpp"

#include "hypermetric/errors.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hypermetric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Point> sphere_points(const Point& z, double r, std::size_t samples, detail::Rng& rng) {
    const std::size_t n = z.dimension();
    std::vector<Point> out;
    if (n == 1) {
        out.push_back(Point{z[0] - r});
        out.push_back(Point{z[0] + r});
        return out;
    }
    out.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        if (n == 2) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(samples);
            out.push_back(z + Point{r * std::cos(angle), r * std::sin(angle)});
        } else {
            out.push_back(z + r * detail::random_direction(rng, n));
        }
    }
    return out;
}

} // namespace

SampleMap::SampleMap(Variant v, DomainSpec source, DomainSpec target)
    : variant_(std::move(v)), source_(std::move(source)), target_(std::move(target)) {}

SampleMap SampleMap::identity(DomainSpec domain) {
    DomainSpec target = domain;
    return SampleMap(map_kind::Identity{}, std::move(domain), std::move(target));
}

SampleMap SampleMap::moebius(MoebiusMap map) {
    if (std::holds_alternative<IdentityMap>(map)) {
        throw InvalidArgument("use SampleMap::identity for the identity map");
    }
    const DomainSpec fallback = UnitBall{2};
    DomainSpec source = moebius_source(map, fallback);
    DomainSpec target = moebius_target(map, fallback);
    return SampleMap(map_kind::Moebius{std::move(map)}, std::move(source), std::move(target));
}

SampleMap SampleMap::radial_stretch(double alpha, std::size_t dimension) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("radial stretch exponent must be positive");
    }
    return SampleMap(map_kind::RadialStretch{alpha}, UnitBall{dimension}, UnitBall{dimension});
}

Point apply_map(const SampleMap& map, const Point& x) {
    require_inside(map.source(), x);
    return std::visit(Overloaded{[&](const map_kind::Identity&) { return x; },
                                 [&](const map_kind::Moebius& m) { return apply_moebius(m.map, x); },
                                 [&](const map_kind::RadialStretch& m) {
                                     const double r = x.norm();
                                     if (r == 0.0) {
                                         return x;
                                     }
                                     return std::pow(r, m.alpha - 1.0) * x;
                                 }},
                      map.variant());
}

DilatationEstimate linear_dilatation(const SampleMap& map, const Point& z,
                                     const std::vector<double>& radii, std::size_t sphere_samples,
                                     std::uint64_t seed) {
    if (radii.empty()) {
        throw InvalidArgument("at least one radius is required");
    }
    if (sphere_samples < 16) {
        throw InvalidArgument("sphere_samples must be at least 16");
    }
    const double clearance = boundary_distance(map.source(), z);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) {
            throw InvalidArgument("radii must be positive");
        }
        if (i > 0 && !(radii[i] < radii[i - 1])) {
            throw InvalidArgument("radii must be strictly decreasing");
        }
        if (!(radii[i] < clearance)) {
            throw InvalidArgument("radius exceeds the boundary distance of z");
        }
    }

    detail::Rng rng(seed);
    const Point fz = apply_map(map, z);
    DilatationEstimate est{z, radii, {}, 1.0};
    for (double r : radii) {
        double hi = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& p : sphere_points(z, r, sphere_samples, rng)) {
            const double stretch = distance(apply_map(map, p), fz);
            hi = std::max(hi, stretch);
            lo = std::min(lo, stretch);
        }
        if (!(lo > 0.0)) {
            throw DegenerateConfiguration("f(x) = f(z) on the sphere of radius " +
                                          format_shortest(r) + ": map not injective at resolution");
        }
        est.ratios.push_back(hi / lo);
    }
    est.H_hat = est.ratios.back();
    return est;
}

BilipschitzEstimate bilipschitz_estimate(const SampleMap& map, const MetricParams& params,
                                         std::size_t pair_count, std::uint64_t seed,
                                         double clearance) {
    if (pair_count == 0) {
        throw InvalidArgument("pair_count must be at least 1");
    }
    const auto pts = sample_interior(map.source(), 2 * pair_count, seed, clearance);
    BilipschitzEstimate est;
    est.L_hat = 0.0;
    for (std::size_t i = 0; i < pair_count; ++i) {
        const Point& x = pts[2 * i];
        const Point& y = pts[2 * i + 1];
        if (x == y) {
            continue;
        }
        const double hs = h_metric(map.source(), params, x, y);
        const double ht = h_metric(map.target(), params, apply_map(map, x), apply_map(map, y));
        if (!(hs > 0.0) || !(ht > 0.0)) {
            throw DegenerateConfiguration("distinct points with zero h distance");
        }
        const double ratio = std::max(ht / hs, hs / ht);
        ++est.pair_count;
        if (ratio > est.L_hat) {
            est.L_hat = ratio;
            est.worst_x = x;
            est.worst_y = y;
        }
    }
    return est;
}

double u_quantity(const DomainSpec& domain, const MetricParams& params, const Point& a,
                  const Point& b) {
    return std::expm1(h_metric(domain, params, a, b)) / params.c;
}

std::pair<double, double> sphere_pair_bracket(const MetricParams& params, double t) {
    if (!(t > 0.0 && t < 1.0)) {
        throw InvalidArgument("sphere_pair_bracket requires 0 < t < 1");
    }
    return {std::log1p(params.c * t / (1.0 + t)), std::log1p(params.c * t / (1.0 - t))};
}

} // namespace hypermetric
