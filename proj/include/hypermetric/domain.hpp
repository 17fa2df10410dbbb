#pragma once

#include "hypermetric/point.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace hypermetric {

/// The open unit ball {|x| < 1}; d(x) = 1 - |x|.
struct UnitBall {
    std::size_t dimension = 2;
    friend bool operator==(const UnitBall&, const UnitBall&) = default;
};

/// The upper half-space {x_n > 0}; d(x) = x_n.
struct HalfSpace {
    std::size_t dimension = 2;
    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// R^n minus the origin; d(x) = |x|.
struct PuncturedSpace {
    std::size_t dimension = 2;
    friend bool operator==(const PuncturedSpace&, const PuncturedSpace&) = default;
};

/// The open interval (a, b) of the real line, with 1-dimensional points.
struct Interval {
    double a = 0.0;
    double b = 1.0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A domain described by user oracles.
///
/// The boundary-distance oracle is expected to be 1-Lipschitz; the library
/// tests that on samples rather than assuming it. `box_lower`/`box_upper`
/// bound the region used for sampling and grid construction.
struct GenericDomain {
    std::size_t dimension = 2;
    std::function<double(const Point&)> boundary_distance;
    std::function<bool(const Point&)> contains;
    std::vector<double> box_lower;
    std::vector<double> box_upper;
    std::string name = "generic";
    /// Segments between interior points stay interior (enables cheaper grid checks).
    bool convex = false;
};

class DomainSpec {
public:
    using Variant = std::variant<UnitBall, HalfSpace, PuncturedSpace, Interval, GenericDomain>;

    DomainSpec(UnitBall v);
    DomainSpec(HalfSpace v);
    DomainSpec(PuncturedSpace v);
    DomainSpec(Interval v);
    DomainSpec(GenericDomain v);

    [[nodiscard]] const Variant& variant() const noexcept { return variant_; }
    [[nodiscard]] std::size_t dimension() const noexcept;

    template <class T>
    [[nodiscard]] bool is() const noexcept {
        return std::holds_alternative<T>(variant_);
    }

    /// Built-in variants compare structurally; generic domains compare by name and dimension.
    friend bool operator==(const DomainSpec& a, const DomainSpec& b);

private:
    Variant variant_;
};

/// Finite nonempty set of points in the complement of a domain.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);
    /// Validates every member against the domain's complement.
    PointSet(std::vector<Point> points, const DomainSpec& outside_of);

    [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return points_.front().dimension(); }

private:
    std::vector<Point> points_;
};

/// Axis-aligned box used by samplers; half-space and punctured space are windowed.
struct SamplingBox {
    std::vector<double> lower;
    std::vector<double> upper;
};

[[nodiscard]] bool contains(const DomainSpec& domain, const Point& x);

/// d_D(x) = dist(x, boundary of D). Throws OutsideDomain unless contains(domain, x).
[[nodiscard]] double boundary_distance(const DomainSpec& domain, const Point& x);

/// d_{D,A}(x) = min over a in A of |x - a|.
[[nodiscard]] double distance_to_set(const Point& x, const PointSet& set);

[[nodiscard]] SamplingBox sampling_box(const DomainSpec& domain);

inline constexpr double kDefaultClearance = 1e-6;

/// Uniform rejection sampling over sampling_box(domain), keeping points with
/// boundary distance >= min_clearance. Deterministic in `seed`.
[[nodiscard]] std::vector<Point> sample_interior(const DomainSpec& domain, std::size_t count,
                                                 std::uint64_t seed,
                                                 double min_clearance = kDefaultClearance);

/// Throws OutsideDomain / DimensionMismatch if x is not an interior point.
void require_inside(const DomainSpec& domain, const Point& x);

/// "ball:2", "halfspace:3", "punctured:2", "interval:0:1".
[[nodiscard]] DomainSpec parse_domain(const std::string& text);
/// Inverse of parse_domain for built-in variants; generic domains render as "generic:<name>:<n>".
[[nodiscard]] std::string to_string(const DomainSpec& domain);

} // namespace hypermetric
