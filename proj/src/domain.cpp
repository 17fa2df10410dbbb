#include "hypermetric/domain.hpp"

#include "hypermetric/errors.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypermetric {

namespace {

constexpr double kWindowHalfWidth = 2.0;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_dimension(const DomainSpec& domain, const Point& x) {
    if (x.dimension() != domain.dimension()) {
        throw DimensionMismatch("point of dimension " + std::to_string(x.dimension()) +
                                " used with domain " + to_string(domain));
    }
}

std::size_t checked_dimension(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("domain dimension must be at least 1");
    }
    return n;
}

} // namespace

DomainSpec::DomainSpec(UnitBall v) : variant_(v) { checked_dimension(v.dimension); }
DomainSpec::DomainSpec(HalfSpace v) : variant_(v) { checked_dimension(v.dimension); }
DomainSpec::DomainSpec(PuncturedSpace v) : variant_(v) { checked_dimension(v.dimension); }

DomainSpec::DomainSpec(Interval v) : variant_(v) {
    if (!(std::isfinite(v.a) && std::isfinite(v.b) && v.a < v.b)) {
        throw InvalidArgument("interval requires finite a < b");
    }
}

DomainSpec::DomainSpec(GenericDomain v) : variant_(std::move(v)) {
    const auto& g = std::get<GenericDomain>(variant_);
    checked_dimension(g.dimension);
    if (!g.boundary_distance || !g.contains) {
        throw InvalidArgument("generic domain needs both boundary-distance and membership oracles");
    }
    if (g.box_lower.size() != g.dimension || g.box_upper.size() != g.dimension) {
        throw InvalidArgument("generic domain box must match its dimension");
    }
    for (std::size_t i = 0; i < g.dimension; ++i) {
        if (!(g.box_lower[i] < g.box_upper[i])) {
            throw InvalidArgument("generic domain box must have lower < upper");
        }
    }
}

std::size_t DomainSpec::dimension() const noexcept {
    return std::visit(Overloaded{[](const Interval&) -> std::size_t { return 1; },
                                 [](const auto& d) -> std::size_t { return d.dimension; }},
                      variant_);
}

bool operator==(const DomainSpec& a, const DomainSpec& b) {
    if (a.variant_.index() != b.variant_.index()) {
        return false;
    }
    return std::visit(
        Overloaded{[&](const GenericDomain& g) {
                       const auto& h = std::get<GenericDomain>(b.variant_);
                       return g.name == h.name && g.dimension == h.dimension;
                   },
                   [&](const auto& v) {
                       using T = std::decay_t<decltype(v)>;
                       return v == std::get<T>(b.variant_);
                   }},
        a.variant_);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw InvalidArgument("point set must be nonempty");
    }
    for (const auto& p : points_) {
        require_same_dimension(p, points_.front());
    }
}

PointSet::PointSet(std::vector<Point> points, const DomainSpec& outside_of)
    : PointSet(std::move(points)) {
    for (const auto& p : points_) {
        if (contains(outside_of, p)) {
            throw InvalidArgument("point set member " + to_string(p) + " lies inside " +
                                  to_string(outside_of));
        }
    }
}

bool contains(const DomainSpec& domain, const Point& x) {
    require_dimension(domain, x);
    return std::visit(Overloaded{[&](const UnitBall&) { return x.norm_squared() < 1.0; },
                                 [&](const HalfSpace&) { return x.last() > 0.0; },
                                 [&](const PuncturedSpace&) { return x.norm() > 0.0; },
                                 [&](const Interval& iv) { return iv.a < x[0] && x[0] < iv.b; },
                                 [&](const GenericDomain& g) { return g.contains(x); }},
                      domain.variant());
}

void require_inside(const DomainSpec& domain, const Point& x) {
    if (!contains(domain, x)) {
        throw OutsideDomain("point (" + to_string(x) + ") is not in " + to_string(domain));
    }
}

double boundary_distance(const DomainSpec& domain, const Point& x) {
    require_inside(domain, x);
    const double d = std::visit(
        Overloaded{[&](const UnitBall&) { return 1.0 - x.norm(); },
                   [&](const HalfSpace&) { return x.last(); },
                   [&](const PuncturedSpace&) { return x.norm(); },
                   [&](const Interval& iv) { return std::min(x[0] - iv.a, iv.b - x[0]); },
                   [&](const GenericDomain& g) { return g.boundary_distance(x); }},
        domain.variant());
    // |x| can round to 1 for points within an ulp of the sphere
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw OutsideDomain("point (" + to_string(x) + ") has no positive clearance in " +
                            to_string(domain));
    }
    return d;
}

double distance_to_set(const Point& x, const PointSet& set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : set.points()) {
        best = std::min(best, distance(x, a));
    }
    return best;
}

SamplingBox sampling_box(const DomainSpec& domain) {
    const std::size_t n = domain.dimension();
    return std::visit(
        Overloaded{[&](const UnitBall&) {
                       return SamplingBox{std::vector<double>(n, -1.0), std::vector<double>(n, 1.0)};
                   },
                   [&](const HalfSpace&) {
                       SamplingBox box{std::vector<double>(n, -kWindowHalfWidth),
                                       std::vector<double>(n, kWindowHalfWidth)};
                       box.lower.back() = 0.0;
                       return box;
                   },
                   [&](const PuncturedSpace&) {
                       return SamplingBox{std::vector<double>(n, -kWindowHalfWidth),
                                          std::vector<double>(n, kWindowHalfWidth)};
                   },
                   [&](const Interval& iv) { return SamplingBox{{iv.a}, {iv.b}}; },
                   [&](const GenericDomain& g) { return SamplingBox{g.box_lower, g.box_upper}; }},
        domain.variant());
}

namespace {

void check_clearance_feasible(const DomainSpec& domain, double clearance) {
    if (!(clearance > 0.0) || !std::isfinite(clearance)) {
        throw InvalidArgument("min_clearance must be positive and finite");
    }
    const double limit = std::visit(
        Overloaded{[](const UnitBall&) { return 1.0; },
                   [](const HalfSpace&) { return kWindowHalfWidth; },
                   [&](const PuncturedSpace&) {
                       return kWindowHalfWidth * std::sqrt(static_cast<double>(domain.dimension()));
                   },
                   [](const Interval& iv) { return 0.5 * (iv.b - iv.a); },
                   [](const GenericDomain&) { return std::numeric_limits<double>::infinity(); }},
        domain.variant());
    if (clearance >= limit) {
        std::ostringstream msg;
        msg << "clearance " << clearance << " is infeasible for " << to_string(domain);
        throw InfeasibleClearance(msg.str());
    }
}

} // namespace

std::vector<Point> sample_interior(const DomainSpec& domain, std::size_t count, std::uint64_t seed,
                                   double min_clearance) {
    if (count == 0) {
        throw InvalidArgument("sample count must be at least 1");
    }
    check_clearance_feasible(domain, min_clearance);
    detail::Rng rng(seed);
    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(detail::sample_with_clearance(domain, rng, min_clearance));
    }
    return out;
}

DomainSpec parse_domain(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    auto parse_size = [&](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            throw InvalidArgument("bad dimension in domain '" + text + "'");
        }
        if (pos != s.size() || v == 0 || v > 64) {
            throw InvalidArgument("bad dimension in domain '" + text + "'");
        }
        return v;
    };
    auto parse_real = [&](const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw InvalidArgument("bad endpoint in domain '" + text + "'");
        }
        if (pos != s.size()) {
            throw InvalidArgument("bad endpoint in domain '" + text + "'");
        }
        return v;
    };
    if (parts.size() == 2) {
        const std::size_t n = parse_size(parts[1]);
        if (parts[0] == "ball") {
            return UnitBall{n};
        }
        if (parts[0] == "halfspace") {
            return HalfSpace{n};
        }
        if (parts[0] == "punctured") {
            return PuncturedSpace{n};
        }
    } else if (parts.size() == 3 && parts[0] == "interval") {
        return Interval{parse_real(parts[1]), parse_real(parts[2])};
    }
    throw InvalidArgument("unknown domain '" + text + "'");
}

std::string to_string(const DomainSpec& domain) {
    return std::visit(
        Overloaded{[](const UnitBall& d) { return "ball:" + std::to_string(d.dimension); },
                   [](const HalfSpace& d) { return "halfspace:" + std::to_string(d.dimension); },
                   [](const PuncturedSpace& d) { return "punctured:" + std::to_string(d.dimension); },
                   [](const Interval& d) {
                       return "interval:" + format_shortest(d.a) + ":" + format_shortest(d.b);
                   },
                   [](const GenericDomain& g) {
                       return "generic:" + g.name + ":" + std::to_string(g.dimension);
                   }},
        domain.variant());
}

} // namespace hypermetric
