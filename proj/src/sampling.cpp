#include "sampling.hpp"

#include "hypermetric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypermetric::detail {

namespace {
constexpr std::size_t kRejectionBudget = 2'000'000;
}

double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

Point uniform_in_box(const SamplingBox& box, Rng& rng) {
    std::vector<double> v(box.lower.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = uniform(rng, box.lower[i], box.upper[i]);
    }
    return Point(std::move(v));
}

Point random_direction(Rng& rng, std::size_t n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        std::vector<double> v(n);
        double s = 0.0;
        for (auto& c : v) {
            c = normal(rng);
            s += c * c;
        }
        if (s > 1e-12) {
            const double inv = 1.0 / std::sqrt(s);
            for (auto& c : v) {
                c *= inv;
            }
            return Point(std::move(v));
        }
    }
}

Point uniform_in_ball(Rng& rng, const Point& center, double radius) {
    const std::size_t n = center.dimension();
    const Point u = random_direction(rng, n);
    const double r = radius * std::pow(uniform(rng, 0.0, 1.0), 1.0 / static_cast<double>(n));
    return center + r * u;
}

Point sample_with_clearance(const DomainSpec& domain, Rng& rng, double clearance) {
    const SamplingBox box = sampling_box(domain);
    for (std::size_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
        Point x = uniform_in_box(box, rng);
        if (contains(domain, x) && boundary_distance(domain, x) >= clearance) {
            return x;
        }
    }
    std::ostringstream msg;
    msg << "no interior point with clearance " << clearance << " found in " << to_string(domain)
        << " after " << kRejectionBudget << " attempts";
    throw InfeasibleClearance(msg.str());
}

Point sample_near_boundary(const DomainSpec& domain, Rng& rng, double depth_lo, double depth_hi) {
    const std::size_t n = domain.dimension();
    const double depth = log_uniform(rng, depth_lo, depth_hi);
    if (domain.is<UnitBall>()) {
        return (1.0 - depth) * random_direction(rng, n);
    }
    if (domain.is<HalfSpace>()) {
        SamplingBox box = sampling_box(domain);
        Point p = uniform_in_box(box, rng);
        std::vector<double> v(p.coords().begin(), p.coords().end());
        v.back() = depth;
        return Point(std::move(v));
    }
    if (domain.is<PuncturedSpace>()) {
        return depth * random_direction(rng, n);
    }
    if (domain.is<Interval>()) {
        const auto& iv = std::get<Interval>(domain.variant());
        const double d = std::min(depth, 0.25 * (iv.b - iv.a));
        return uniform(rng, 0.0, 1.0) < 0.5 ? Point{iv.a + d} : Point{iv.b - d};
    }
    return sample_with_clearance(domain, rng, depth_lo);
}

double ray_extent(const DomainSpec& domain, const Point& z, const Point& u, double cap) {
    if (domain.is<UnitBall>()) {
        const double zu = dot(z, u);
        const double disc = zu * zu - z.norm_squared() + 1.0;
        return std::min(cap, -zu + std::sqrt(std::max(disc, 0.0)));
    }
    if (domain.is<HalfSpace>()) {
        return u.last() < 0.0 ? std::min(cap, -z.last() / u.last()) : cap;
    }
    if (domain.is<Interval>()) {
        const auto& iv = std::get<Interval>(domain.variant());
        return std::min(cap, u[0] > 0.0 ? iv.b - z[0] : z[0] - iv.a);
    }
    if (domain.is<PuncturedSpace>()) {
        // the ray hits the puncture only when z is anti-parallel to u
        const double zu = dot(z, u);
        const double zn = z.norm();
        if (zu < 0.0 && std::abs(zu + zn) <= 1e-15 * zn) {
            return std::min(cap, zn);
        }
        return cap;
    }
    // generic: march then bisect on membership
    const int steps = 256;
    double inside = 0.0;
    for (int i = 1; i <= steps; ++i) {
        const double s = cap * i / steps;
        if (!contains(domain, z + s * u)) {
            double lo = inside;
            double hi = s;
            for (int k = 0; k < 60; ++k) {
                const double mid = 0.5 * (lo + hi);
                (contains(domain, z + mid * u) ? lo : hi) = mid;
            }
            return lo;
        }
        inside = s;
    }
    return cap;
}

} // namespace hypermetric::detail

namespace hypermetric::detail {

std::vector<Point> sample_complement(const DomainSpec& domain, Rng& rng, std::size_t count) {
    const std::size_t n = domain.dimension();
    std::vector<Point> out;
    if (domain.is<PuncturedSpace>()) {
        out.push_back(origin(n));
        return out;
    }
    SamplingBox box = sampling_box(domain);
    for (std::size_t d = 0; d < n; ++d) {
        const double w = box.upper[d] - box.lower[d];
        box.lower[d] -= 0.5 * w;
        box.upper[d] += 0.5 * w;
    }
    for (std::size_t attempt = 0; out.size() < count && attempt < 1'000'000; ++attempt) {
        Point p = uniform_in_box(box, rng);
        if (!contains(domain, p)) {
            out.push_back(std::move(p));
        }
    }
    if (out.empty()) {
        throw InfeasibleClearance("no complement point found near " + to_string(domain));
    }
    return out;
}

} // namespace hypermetric::detail
