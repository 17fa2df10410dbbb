#pragma once

// Random primitives shared by the samplers in domain, maps and verify.

#include "hypermetric/domain.hpp"
#include "hypermetric/point.hpp"

#include <random>

namespace hypermetric::detail {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
/// Log-uniform in [lo, hi], lo > 0.
double log_uniform(Rng& rng, double lo, double hi);

Point uniform_in_box(const SamplingBox& box, Rng& rng);
Point random_direction(Rng& rng, std::size_t n);
/// Uniform in the Euclidean ball B(center, radius).
Point uniform_in_ball(Rng& rng, const Point& center, double radius);

/// Rejection sample over sampling_box(domain) with d(x) >= clearance.
Point sample_with_clearance(const DomainSpec& domain, Rng& rng, double clearance);

/// A point whose boundary distance is log-uniform in [depth_lo, depth_hi].
/// Generic domains fall back to sample_with_clearance(depth_lo).
Point sample_near_boundary(const DomainSpec& domain, Rng& rng, double depth_lo, double depth_hi);

/// Largest s <= cap such that z + t u stays in the domain for t in [0, s).
double ray_extent(const DomainSpec& domain, const Point& z, const Point& u, double cap);

} // namespace hypermetric::detail

namespace hypermetric::detail {

/// `count` points outside the domain, near it (for d_{D,A} checks).
std::vector<Point> sample_complement(const DomainSpec& domain, Rng& rng, std::size_t count);

} // namespace hypermetric::detail
