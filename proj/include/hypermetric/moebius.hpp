#pragma once

#include "hypermetric/domain.hpp"
#include "hypermetric/point.hpp"

#include <cstddef>
#include <string>
#include <variant>

namespace hypermetric {

/// Self-map of the unit ball sending `a` to the origin (|a| < 1).
struct BallAutomorphism {
    Point a;
};

/// Map of the unit ball onto the upper half-space sending the south pole -e_n to 0
/// and the origin to e_n.
struct BallToHalfSpace {
    std::size_t dimension = 2;
};

struct IdentityMap {};

using MoebiusMap = std::variant<BallAutomorphism, BallToHalfSpace, IdentityMap>;

/// Validating constructor for BallAutomorphism.
[[nodiscard]] MoebiusMap ball_automorphism(Point a);

/// |a,b,c,d| = |a-c||b-d| / (|a-b||c-d|).
[[nodiscard]] double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

/// Image of x. Throws OutsideDomain when x is not in the map's source domain.
[[nodiscard]] Point apply_moebius(const MoebiusMap& map, const Point& x);

/// Source/target models; IdentityMap has neither and the helpers take a fallback.
[[nodiscard]] DomainSpec moebius_source(const MoebiusMap& map, const DomainSpec& fallback);
[[nodiscard]] DomainSpec moebius_target(const MoebiusMap& map, const DomainSpec& fallback);

[[nodiscard]] std::string describe(const MoebiusMap& map);

} // namespace hypermetric
