#pragma once

// Closed-form hyperbolic-type distances on subdomains of R^n.
//
// All formulas consume only the boundary distance d(x) of the domain, so they
// work for every DomainSpec variant. Coincident points short-circuit to 0.

#include "hypermetric/domain.hpp"
#include "hypermetric/point.hpp"
#include "hypermetric/quasihyperbolic.hpp"

#include <string>
#include <variant>

namespace hypermetric {

/// The constant c of h_{D,c}. Values below 2 are allowed (falsification needs them)
/// but h is only guaranteed to be a metric for c >= 2.
struct MetricParams {
    double c = 2.0;

    MetricParams() = default;
    explicit MetricParams(double c_value);

    [[nodiscard]] bool sub_sharp() const noexcept { return c < 2.0; }
    friend bool operator==(const MetricParams&, const MetricParams&) = default;
};

namespace metric_kind {
struct H {
    MetricParams params;
};
struct J {};
/// phi_D; evaluates like a distance but fails the triangle inequality.
struct Phi {};
struct RhoBall {};
struct RhoHalfSpace {};
struct QuasiHyperbolic {
    KControls controls;
};
} // namespace metric_kind

using MetricKind = std::variant<metric_kind::H, metric_kind::J, metric_kind::Phi,
                                metric_kind::RhoBall, metric_kind::RhoHalfSpace,
                                metric_kind::QuasiHyperbolic>;

/// h_{D,c}(x,y) = log(1 + c|x-y| / sqrt(d(x) d(y))).
[[nodiscard]] double h_metric(const DomainSpec& domain, const MetricParams& params, const Point& x,
                              const Point& y);

/// h with arbitrary clearances: log(1 + c rho / sqrt(dA_x dA_y)).
/// With dA = boundary distance this is h_metric; with dA = distance_to_set it is h^A.
[[nodiscard]] double h_metric_general(double rho_xy, double dA_x, double dA_y,
                                      const MetricParams& params);

/// Distance ratio metric j_D(x,y) = log(1 + |x-y| / min(d(x), d(y))).
[[nodiscard]] double j_metric(const DomainSpec& domain, const Point& x, const Point& y);

/// phi_D(x,y) = log(1 + max(|x-y|/sqrt(d(x)d(y)), |x-y|^2/(d(x)d(y)))).
/// Not a metric: see phi_triangle_counterexample in verify.hpp.
[[nodiscard]] double phi_quantity(const DomainSpec& domain, const Point& x, const Point& y);

/// Hyperbolic distance of the upper half-space: cosh rho = 1 + |x-y|^2 / (2 x_n y_n).
[[nodiscard]] double rho_halfspace(const Point& x, const Point& y);

/// Hyperbolic distance of the unit ball: sinh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2)).
/// Cross-checked against the tanh(rho/2) form; disagreement throws NumericalInconsistency.
[[nodiscard]] double rho_ball(const Point& x, const Point& y);

/// f(t) = log(1 + 2c sinh(t/2)).
[[nodiscard]] double comparison_f(double t, double c);

/// Dispatches on MetricKind. RhoBall/RhoHalfSpace require the matching domain.
[[nodiscard]] double evaluate(const DomainSpec& domain, const MetricKind& kind, const Point& x,
                              const Point& y);

[[nodiscard]] std::string metric_name(const MetricKind& kind);
/// "h", "j", "phi", "rho-ball", "rho-halfspace", "k".
[[nodiscard]] MetricKind parse_metric(const std::string& name, const MetricParams& params,
                                      const KControls& controls = {});

} // namespace hypermetric
