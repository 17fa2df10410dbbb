#pragma once

// Test homeomorphisms and the estimators for their linear dilatation and their
// bilipschitz constant with respect to h_{G,c}.

#include "hypermetric/domain.hpp"
#include "hypermetric/metrics.hpp"
#include "hypermetric/moebius.hpp"
#include "hypermetric/point.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace hypermetric {

namespace map_kind {
struct Identity {};
struct Moebius {
    MoebiusMap map;
};
/// f(x) = |x|^(alpha-1) x on the unit ball, f(0) = 0.
struct RadialStretch {
    double alpha = 1.0;
};
} // namespace map_kind

class SampleMap {
public:
    using Variant = std::variant<map_kind::Identity, map_kind::Moebius, map_kind::RadialStretch>;

    static SampleMap identity(DomainSpec domain);
    static SampleMap moebius(MoebiusMap map);
    static SampleMap radial_stretch(double alpha, std::size_t dimension);

    [[nodiscard]] const Variant& variant() const noexcept { return variant_; }
    [[nodiscard]] const DomainSpec& source() const noexcept { return source_; }
    [[nodiscard]] const DomainSpec& target() const noexcept { return target_; }

private:
    SampleMap(Variant v, DomainSpec source, DomainSpec target);

    Variant variant_;
    DomainSpec source_;
    DomainSpec target_;
};

[[nodiscard]] Point apply_map(const SampleMap& map, const Point& x);

struct DilatationEstimate {
    Point z;
    std::vector<double> radii;
    /// max/min of |f(x) - f(z)| over the sampled sphere, per radius
    std::vector<double> ratios;
    /// ratio at the smallest radius
    double H_hat = 1.0;
};

/// Sphere sampling is a uniform angle grid in 2-D and seeded random directions in n >= 3
/// (the seed is unused in 1-D and 2-D).
[[nodiscard]] DilatationEstimate linear_dilatation(const SampleMap& map, const Point& z,
                                                   const std::vector<double>& radii,
                                                   std::size_t sphere_samples, std::uint64_t seed);

struct BilipschitzEstimate {
    double L_hat = 1.0;
    Point worst_x;
    Point worst_y;
    std::size_t pair_count = 0;
};

/// Max over sampled source pairs of max(h_t(fx,fy)/h_s(x,y), h_s(x,y)/h_t(fx,fy)).
[[nodiscard]] BilipschitzEstimate bilipschitz_estimate(const SampleMap& map,
                                                       const MetricParams& params,
                                                       std::size_t pair_count, std::uint64_t seed,
                                                       double clearance = kDefaultClearance);

/// U_G(a,b) = (e^{h_{G,c}(a,b)} - 1) / c, which equals |a-b| / sqrt(d(a) d(b)).
[[nodiscard]] double u_quantity(const DomainSpec& domain, const MetricParams& params, const Point& a,
                                const Point& b);

/// Interval containing h_{G,c}(x,y) for x, y with |x-z| = |y-z| = |x-y| = t d(z), 0 < t < 1.
///
/// Both d(x) and d(y) lie in [(1-t) d(z), (1+t) d(z)], so the bracket is
/// [log(1 + ct/(1+t)), log(1 + ct/(1-t))].
[[nodiscard]] std::pair<double, double> sphere_pair_bracket(const MetricParams& params, double t);

} // namespace hypermetric
