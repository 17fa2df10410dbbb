#include "hypermetric/moebius.hpp"

#include "hypermetric/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hypermetric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// T_a(x) = ((1-|a|^2)(x-a) - |x-a|^2 a) / (1 - 2<x,a> + |x|^2|a|^2)
Point automorphism_image(const Point& a, const Point& x) {
    require_same_dimension(a, x);
    if (!(x.norm_squared() < 1.0)) {
        throw OutsideDomain("ball automorphism applied to (" + to_string(x) + ") outside the ball");
    }
    const double a2 = a.norm_squared();
    const double x2 = x.norm_squared();
    const Point diff = x - a;
    const double denom = 1.0 - 2.0 * dot(x, a) + x2 * a2;
    return (1.0 / denom) * ((1.0 - a2) * diff - diff.norm_squared() * a);
}

// Reflected inversion in the sphere |z - e_n| = sqrt(2):
//   y_i = 2 x_i / |x - e_n|^2 (i < n),  y_n = (1 - |x|^2) / |x - e_n|^2
Point cayley_image(std::size_t n, const Point& x) {
    if (x.dimension() != n) {
        throw DimensionMismatch("ball-to-half-space map of dimension " + std::to_string(n) +
                                " applied to a point of dimension " +
                                std::to_string(x.dimension()));
    }
    if (!(x.norm_squared() < 1.0)) {
        throw OutsideDomain("ball-to-half-space map applied to (" + to_string(x) +
                            ") outside the ball");
    }
    const double r = x.norm();
    const double q = distance_squared(x, axis_point(n, n - 1));
    std::vector<double> v(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        v[i] = 2.0 * x[i] / q;
    }
    v[n - 1] = (1.0 - r) * (1.0 + r) / q;
    return Point(std::move(v));
}

} // namespace

MoebiusMap ball_automorphism(Point a) {
    if (!(a.norm_squared() < 1.0)) {
        throw InvalidArgument("ball automorphism needs |a| < 1");
    }
    return BallAutomorphism{std::move(a)};
}

double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double ac = distance(a, c);
    const double bd = distance(b, d);
    const double ab = distance(a, b);
    const double cd = distance(c, d);
    const double scale = std::max({ac, bd, ab, cd, distance(a, d), distance(b, c)});
    const double eps = 1e-12 * scale;
    if (!(scale > 0.0) || ac <= eps || bd <= eps || ab <= eps || cd <= eps) {
        throw DegenerateConfiguration("absolute ratio of nearly coincident points");
    }
    return (ac * bd) / (ab * cd);
}

Point apply_moebius(const MoebiusMap& map, const Point& x) {
    return std::visit(Overloaded{[&](const BallAutomorphism& m) { return automorphism_image(m.a, x); },
                                 [&](const BallToHalfSpace& m) { return cayley_image(m.dimension, x); },
                                 [&](const IdentityMap&) { return x; }},
                      map);
}

DomainSpec moebius_source(const MoebiusMap& map, const DomainSpec& fallback) {
    return std::visit(
        Overloaded{[](const BallAutomorphism& m) { return DomainSpec(UnitBall{m.a.dimension()}); },
                   [](const BallToHalfSpace& m) { return DomainSpec(UnitBall{m.dimension}); },
                   [&](const IdentityMap&) { return fallback; }},
        map);
}

DomainSpec moebius_target(const MoebiusMap& map, const DomainSpec& fallback) {
    return std::visit(
        Overloaded{[](const BallAutomorphism& m) { return DomainSpec(UnitBall{m.a.dimension()}); },
                   [](const BallToHalfSpace& m) { return DomainSpec(HalfSpace{m.dimension}); },
                   [&](const IdentityMap&) { return fallback; }},
        map);
}

std::string describe(const MoebiusMap& map) {
    return std::visit(Overloaded{[](const BallAutomorphism& m) {
                                     return "ball-automorphism(" + to_string(m.a) + ")";
                                 },
                                 [](const BallToHalfSpace& m) {
                                     return "ball-to-halfspace(" + std::to_string(m.dimension) + ")";
                                 },
                                 [](const IdentityMap&) { return std::string("identity"); }},
                      map);
}

} // namespace hypermetric
