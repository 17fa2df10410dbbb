#include "hypermetric/metrics.hpp"

#include "hypermetric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypermetric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// acosh(1 + u) for u >= 0 without the cancellation of 1 + u near 1
double acosh1p(double u) { return std::log1p(u + std::sqrt(u * (u + 2.0))); }

// 1 - |x|^2 computed as (1 - |x|)(1 + |x|)
double ball_defect(const Point& x) {
    const double r = x.norm();
    return (1.0 - r) * (1.0 + r);
}

} // namespace

MetricParams::MetricParams(double c_value) : c(c_value) {
    if (!(c_value > 0.0) || !std::isfinite(c_value)) {
        throw InvalidArgument("metric constant c must be positive and finite");
    }
}

double h_metric_general(double rho_xy, double dA_x, double dA_y, const MetricParams& params) {
    if (!(dA_x > 0.0) || !(dA_y > 0.0)) {
        throw InvalidArgument("clearances must be positive");
    }
    if (!(rho_xy >= 0.0)) {
        throw InvalidArgument("distance must be nonnegative");
    }
    if (rho_xy == 0.0) {
        return 0.0;
    }
    return std::log1p(params.c * rho_xy / std::sqrt(dA_x * dA_y));
}

double h_metric(const DomainSpec& domain, const MetricParams& params, const Point& x,
                const Point& y) {
    const double dx = boundary_distance(domain, x);
    const double dy = boundary_distance(domain, y);
    if (x == y) {
        return 0.0;
    }
    return h_metric_general(distance(x, y), dx, dy, params);
}

double j_metric(const DomainSpec& domain, const Point& x, const Point& y) {
    const double dx = boundary_distance(domain, x);
    const double dy = boundary_distance(domain, y);
    if (x == y) {
        return 0.0;
    }
    return std::log1p(distance(x, y) / std::min(dx, dy));
}

double phi_quantity(const DomainSpec& domain, const Point& x, const Point& y) {
    const double dx = boundary_distance(domain, x);
    const double dy = boundary_distance(domain, y);
    if (x == y) {
        return 0.0;
    }
    const double r = distance(x, y);
    const double lin = r / std::sqrt(dx * dy);
    return std::log1p(std::max(lin, lin * lin));
}

double rho_halfspace(const Point& x, const Point& y) {
    require_same_dimension(x, y);
    if (!(x.last() > 0.0) || !(y.last() > 0.0)) {
        throw OutsideDomain("half-space points need a positive last coordinate");
    }
    if (x == y) {
        return 0.0;
    }
    return acosh1p(distance_squared(x, y) / (2.0 * x.last() * y.last()));
}

double rho_ball(const Point& x, const Point& y) {
    require_same_dimension(x, y);
    if (!(x.norm_squared() < 1.0) || !(y.norm_squared() < 1.0)) {
        throw OutsideDomain("unit-ball points need |x| < 1");
    }
    if (x == y) {
        return 0.0;
    }
    const double r = distance(x, y);
    const double defect = ball_defect(x) * ball_defect(y);
    const double rho = 2.0 * std::asinh(r / std::sqrt(defect));

    // tanh(rho/2) = |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2))
    const double th = r / std::sqrt(r * r + defect);
    if (std::abs(std::tanh(0.5 * rho) - th) > 1e-12) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sinh and tanh forms of the ball metric disagree at (" << to_string(x) << "), ("
            << to_string(y) << ")";
        throw NumericalInconsistency(msg.str());
    }
    return rho;
}

double comparison_f(double t, double c) {
    if (!(t >= 0.0)) {
        throw InvalidArgument("comparison_f requires t >= 0");
    }
    if (!(c > 0.0)) {
        throw InvalidArgument("comparison_f requires c > 0");
    }
    return std::log1p(2.0 * c * std::sinh(0.5 * t));
}

double evaluate(const DomainSpec& domain, const MetricKind& kind, const Point& x, const Point& y) {
    return std::visit(
        Overloaded{
            [&](const metric_kind::H& k) { return h_metric(domain, k.params, x, y); },
            [&](const metric_kind::J&) { return j_metric(domain, x, y); },
            [&](const metric_kind::Phi&) { return phi_quantity(domain, x, y); },
            [&](const metric_kind::RhoBall&) {
                if (!domain.is<UnitBall>()) {
                    throw SuiteMismatch("rho-ball is only defined on the unit ball");
                }
                require_inside(domain, x);
                require_inside(domain, y);
                return rho_ball(x, y);
            },
            [&](const metric_kind::RhoHalfSpace&) {
                if (!domain.is<HalfSpace>()) {
                    throw SuiteMismatch("rho-halfspace is only defined on the half-space");
                }
                require_inside(domain, x);
                require_inside(domain, y);
                return rho_halfspace(x, y);
            },
            [&](const metric_kind::QuasiHyperbolic& k) {
                return k_estimate(domain, x, y, k.controls).value;
            }},
        kind);
}

std::string metric_name(const MetricKind& kind) {
    return std::visit(Overloaded{[](const metric_kind::H&) { return std::string("h"); },
                                 [](const metric_kind::J&) { return std::string("j"); },
                                 [](const metric_kind::Phi&) { return std::string("phi"); },
                                 [](const metric_kind::RhoBall&) { return std::string("rho-ball"); },
                                 [](const metric_kind::RhoHalfSpace&) {
                                     return std::string("rho-halfspace");
                                 },
                                 [](const metric_kind::QuasiHyperbolic&) { return std::string("k"); }},
                      kind);
}

MetricKind parse_metric(const std::string& name, const MetricParams& params,
                        const KControls& controls) {
    if (name == "h") {
        return metric_kind::H{params};
    }
    if (name == "j") {
        return metric_kind::J{};
    }
    if (name == "phi") {
        return metric_kind::Phi{};
    }
    if (name == "rho-ball") {
        return metric_kind::RhoBall{};
    }
    if (name == "rho-halfspace") {
        return metric_kind::RhoHalfSpace{};
    }
    if (name == "k") {
        return metric_kind::QuasiHyperbolic{controls};
    }
    throw InvalidArgument("unknown metric '" + name + "'");
}

} // namespace hypermetric
