#include "hypermetric/quasihyperbolic.hpp"

#include "hypermetric/errors.hpp"
#include "hypermetric/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace hypermetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Window {
    std::vector<double> lower;
    std::vector<double> upper;
    // annulus bounds, only used for the punctured space
    double inner = 0.0;
    double outer = kInf;
};

// Radius of the half-space geodesic through x and y (a vertical half-circle
// centred on the boundary), or the larger height for vertically aligned points.
double halfspace_geodesic_top(const Point& x, const Point& y) {
    const std::size_t n = x.dimension();
    double horiz2 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        horiz2 += (x[i] - y[i]) * (x[i] - y[i]);
    }
    const double top = std::max(x.last(), y.last());
    if (horiz2 == 0.0) {
        return top;
    }
    const double delta = std::sqrt(horiz2);
    const double centre = (horiz2 + y.last() * y.last() - x.last() * x.last()) / (2.0 * delta);
    return std::max(top, std::hypot(centre, x.last()));
}

Window query_window(const DomainSpec& domain, const Point& x, const Point& y, double reach) {
    const std::size_t n = domain.dimension();
    Window w;
    if (domain.is<HalfSpace>()) {
        const double margin = 0.05 * distance(x, y) + reach;
        w.lower.resize(n);
        w.upper.resize(n);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            w.lower[i] = std::min(x[i], y[i]) - margin;
            w.upper[i] = std::max(x[i], y[i]) + margin;
        }
        // the geodesic arc between x and y never dips below the lower endpoint
        w.lower[n - 1] = 0.5 * std::min(x.last(), y.last());
        w.upper[n - 1] = 1.1 * halfspace_geodesic_top(x, y) + reach;
        return w;
    }
    if (domain.is<PuncturedSpace>()) {
        w.inner = 0.5 * std::min(x.norm(), y.norm());
        w.outer = 2.0 * std::max(x.norm(), y.norm());
        w.lower.assign(n, -w.outer);
        w.upper.assign(n, w.outer);
        return w;
    }
    const SamplingBox box = sampling_box(domain);
    w.lower = box.lower;
    w.upper = box.upper;
    return w;
}

bool is_convex(const DomainSpec& domain) {
    if (domain.is<GenericDomain>()) {
        return std::get<GenericDomain>(domain.variant()).convex;
    }
    return !domain.is<PuncturedSpace>();
}

// distance from the origin to the segment [a, b]
double segment_origin_distance(std::span<const double> a, std::span<const double> b) {
    double ab2 = 0.0;
    double a_dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = b[i] - a[i];
        ab2 += d * d;
        a_dot += a[i] * d;
    }
    const double t = ab2 > 0.0 ? std::clamp(-a_dot / ab2, 0.0, 1.0) : 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double p = a[i] + t * (b[i] - a[i]);
        s += p * p;
    }
    return std::sqrt(s);
}

} // namespace

int default_stencil_radius(std::size_t dimension) {
    switch (dimension) {
    case 1:
        return 1;
    case 2:
        return 4;
    default:
        return 2;
    }
}

GeodesicGrid::GeodesicGrid(const DomainSpec& domain, const Point& x, const Point& y, double spacing,
                           const KControls& controls)
    : domain_(domain), spacing_(spacing), dim_(domain.dimension()) {
    if (dim_ == 0 || dim_ > kMaxDim) {
        throw InvalidArgument("quasihyperbolic grids support dimensions 1 to 3");
    }
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw InvalidArgument("grid spacing must be positive");
    }
    require_inside(domain, x);
    require_inside(domain, y);

    const int radius = controls.stencil_radius > 0 ? controls.stencil_radius
                                                   : default_stencil_radius(dim_);

    // stencil: primitive offsets in [-radius, radius]^n
    Index lo_delta{};
    Index hi_delta{};
    for (std::size_t d = 0; d < dim_; ++d) {
        lo_delta[d] = -radius;
        hi_delta[d] = radius;
    }
    Index delta = lo_delta;
    for (;;) {
        std::int64_t g = 0;
        double len2 = 0.0;
        for (std::size_t d = 0; d < dim_; ++d) {
            g = std::gcd(g, std::abs(delta[d]));
            len2 += static_cast<double>(delta[d] * delta[d]);
        }
        if (g == 1) {
            stencil_.push_back(Offset{delta, 0, spacing * std::sqrt(len2)});
            reach_ = std::max(reach_, spacing * std::sqrt(len2));
        }
        std::size_t d = 0;
        while (d < dim_ && ++delta[d] > hi_delta[d]) {
            delta[d] = lo_delta[d];
            ++d;
        }
        if (d == dim_) {
            break;
        }
    }

    const Window window = query_window(domain, x, y, reach_);
    inner_radius_ = window.inner;
    outer_radius_ = window.outer;

    double total = 1.0;
    for (std::size_t d = 0; d < dim_; ++d) {
        const auto lo = static_cast<std::int64_t>(std::ceil(window.lower[d] / spacing));
        const auto hi = static_cast<std::int64_t>(std::floor(window.upper[d] / spacing));
        origin_index_[d] = lo;
        extent_[d] = std::max<std::int64_t>(hi - lo + 1, 0);
        total *= static_cast<double>(extent_[d]);
    }
    if (total > static_cast<double>(controls.node_cap)) {
        std::ostringstream msg;
        msg << "grid at spacing " << spacing << " needs " << total << " lattice points, cap is "
            << controls.node_cap;
        throw ResourceExceeded(msg.str());
    }
    std::int64_t stride = 1;
    for (std::size_t d = 0; d < dim_; ++d) {
        stride_[d] = stride;
        stride *= extent_[d];
    }
    for (auto& off : stencil_) {
        for (std::size_t d = 0; d < dim_; ++d) {
            off.linear += off.delta[d] * stride_[d];
        }
    }

    inv_d_.assign(static_cast<std::size_t>(total), 0.0);
    for (std::size_t i = 0; i < inv_d_.size(); ++i) {
        const Point p = node_point(i);
        if (!contains(domain, p)) {
            continue;
        }
        if (domain.is<PuncturedSpace>()) {
            const double r = p.norm();
            if (r < inner_radius_ || r > outer_radius_) {
                continue;
            }
        }
        const double d = boundary_distance(domain, p);
        if (d >= 0.5 * spacing) {
            inv_d_[i] = 1.0 / d;
            ++node_count_;
        }
    }
}

GeodesicGrid::Index GeodesicGrid::unflatten(std::size_t i) const {
    Index idx{};
    auto rest = static_cast<std::int64_t>(i);
    for (std::size_t d = 0; d < dim_; ++d) {
        idx[d] = rest % extent_[d];
        rest /= extent_[d];
    }
    return idx;
}

Point GeodesicGrid::node_point(std::size_t i) const {
    const Index idx = unflatten(i);
    std::vector<double> v(dim_);
    for (std::size_t d = 0; d < dim_; ++d) {
        v[d] = static_cast<double>(origin_index_[d] + idx[d]) * spacing_;
    }
    return Point(std::move(v));
}

bool GeodesicGrid::neighbour(std::size_t i, const Index& idx, const Offset& off,
                             std::size_t& j) const {
    for (std::size_t d = 0; d < dim_; ++d) {
        const std::int64_t k = idx[d] + off.delta[d];
        if (k < 0 || k >= extent_[d]) {
            return false;
        }
    }
    j = static_cast<std::size_t>(static_cast<std::int64_t>(i) + off.linear);
    return inv_d_[j] > 0.0;
}

bool GeodesicGrid::segment_admissible(const Point& a, const Point& b) const {
    if (is_convex(domain_)) {
        return true;
    }
    if (domain_.is<PuncturedSpace>()) {
        return segment_origin_distance(a.coords(), b.coords()) >=
               std::max(inner_radius_, 0.5 * spacing_);
    }
    for (double t : {0.25, 0.5, 0.75}) {
        const Point p = a + t * (b - a);
        if (!contains(domain_, p) || boundary_distance(domain_, p) < 0.25 * spacing_) {
            return false;
        }
    }
    return true;
}

bool GeodesicGrid::edge_admissible(std::size_t i, std::size_t j) const {
    if (is_convex(domain_)) {
        return true;
    }
    if (domain_.is<PuncturedSpace>()) {
        // only segments starting near the inner sphere can dip below it
        const double near = std::min(1.0 / inv_d_[i], 1.0 / inv_d_[j]);
        if (near >= std::max(inner_radius_, 0.5 * spacing_) + reach_) {
            return true;
        }
    }
    return segment_admissible(node_point(i), node_point(j));
}

void GeodesicGrid::for_each_edge(std::size_t i,
                                 const std::function<void(std::size_t, double)>& fn) const {
    if (!is_node(i)) {
        return;
    }
    const Index idx = unflatten(i);
    for (const auto& off : stencil_) {
        std::size_t j = 0;
        if (neighbour(i, idx, off, j) && edge_admissible(i, j)) {
            fn(j, off.length * 0.5 * (inv_d_[i] + inv_d_[j]));
        }
    }
}

std::vector<std::pair<std::size_t, double>> GeodesicGrid::attach(const Point& p) const {
    const double inv_dp = 1.0 / boundary_distance(domain_, p);
    Index lo{};
    Index hi{};
    for (std::size_t d = 0; d < dim_; ++d) {
        lo[d] = std::max<std::int64_t>(
            static_cast<std::int64_t>(std::ceil((p[d] - reach_) / spacing_)) - origin_index_[d], 0);
        hi[d] = std::min<std::int64_t>(
            static_cast<std::int64_t>(std::floor((p[d] + reach_) / spacing_)) - origin_index_[d],
            extent_[d] - 1);
        if (lo[d] > hi[d]) {
            return {};
        }
    }
    std::vector<std::pair<std::size_t, double>> out;
    Index idx = lo;
    for (;;) {
        std::int64_t flat = 0;
        for (std::size_t d = 0; d < dim_; ++d) {
            flat += idx[d] * stride_[d];
        }
        const auto i = static_cast<std::size_t>(flat);
        if (inv_d_[i] > 0.0) {
            const Point q = node_point(i);
            const double len = distance(p, q);
            if (len <= reach_ && segment_admissible(p, q)) {
                out.emplace_back(i, len * 0.5 * (inv_dp + inv_d_[i]));
            }
        }
        std::size_t d = 0;
        while (d < dim_ && ++idx[d] > hi[d]) {
            idx[d] = lo[d];
            ++d;
        }
        if (d == dim_) {
            break;
        }
    }
    return out;
}

double GeodesicGrid::shortest_path(const Point& x_in, const Point& y_in) const {
    if (x_in == y_in) {
        require_inside(domain_, x_in);
        return 0.0;
    }
    // canonical endpoint order keeps the result bitwise symmetric
    const bool swap = std::lexicographical_compare(y_in.coords().begin(), y_in.coords().end(),
                                                   x_in.coords().begin(), x_in.coords().end());
    const Point& x = swap ? y_in : x_in;
    const Point& y = swap ? x_in : y_in;

    const auto sources = attach(x);
    std::unordered_map<std::size_t, double> targets;
    for (const auto& [i, w] : attach(y)) {
        targets.emplace(i, w);
    }

    double best = kInf;
    const double direct = distance(x, y);
    if (direct <= reach_ && segment_admissible(x, y)) {
        best = direct * 0.5 * (1.0 / boundary_distance(domain_, x) + 1.0 / boundary_distance(domain_, y));
    }

    std::vector<double> dist(inv_d_.size(), kInf);
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (const auto& [i, w] : sources) {
        if (w < dist[i]) {
            dist[i] = w;
            heap.emplace(w, i);
        }
    }
    const bool convex = is_convex(domain_);
    while (!heap.empty()) {
        const auto [du, u] = heap.top();
        heap.pop();
        if (du > dist[u]) {
            continue;
        }
        if (du >= best) {
            break;
        }
        if (auto it = targets.find(u); it != targets.end()) {
            best = std::min(best, du + it->second);
        }
        const Index idx = unflatten(u);
        const double inv_u = inv_d_[u];
        for (const auto& off : stencil_) {
            std::size_t v = 0;
            if (!neighbour(u, idx, off, v)) {
                continue;
            }
            const double nd = du + off.length * 0.5 * (inv_u + inv_d_[v]);
            if (nd < dist[v] && (convex || edge_admissible(u, v))) {
                dist[v] = nd;
                heap.emplace(nd, v);
            }
        }
    }
    if (!std::isfinite(best)) {
        throw DisconnectedGrid("no grid path joins (" + to_string(x) + ") and (" + to_string(y) +
                               ") at spacing " + std::to_string(spacing_));
    }
    return best;
}

double k_exact_halfspace(const Point& x, const Point& y) { return rho_halfspace(x, y); }

double k_exact_punctured(const Point& x, const Point& y) {
    require_same_dimension(x, y);
    const double rx = x.norm();
    const double ry = y.norm();
    if (!(rx > 0.0) || !(ry > 0.0)) {
        throw OutsideDomain("punctured-space points must be nonzero");
    }
    if (x == y) {
        return 0.0;
    }
    double theta = 0.0;
    if (x.dimension() == 2) {
        theta = std::abs(std::atan2(x[0] * y[1] - x[1] * y[0], dot(x, y)));
    } else {
        const double xy = dot(x, y);
        theta = std::atan2(std::sqrt(std::max(rx * rx * ry * ry - xy * xy, 0.0)), xy);
    }
    const double lr = std::log(rx / ry);
    return std::hypot(theta, lr);
}

KEstimate k_estimate(const DomainSpec& domain, const Point& x, const Point& y,
                     const KControls& controls) {
    if (!(controls.initial_spacing > 0.0) || !std::isfinite(controls.initial_spacing)) {
        throw InvalidArgument("initial spacing must be positive");
    }
    if (controls.refinements < 0) {
        throw InvalidArgument("refinements must be >= 0");
    }
    if (controls.node_cap == 0) {
        throw InvalidArgument("node cap must be positive");
    }
    require_inside(domain, x);
    require_inside(domain, y);

    KEstimate est;
    double spacing = controls.initial_spacing;
    for (int level = 0; level <= controls.refinements; ++level, spacing *= 0.5) {
        double value = 0.0;
        if (!(x == y)) {
            const GeodesicGrid grid(domain, x, y, spacing, controls);
            value = grid.shortest_path(x, y);
        }
        est.refinement_history.emplace_back(spacing, value);
        est.value = value;
        est.spacing = spacing;
    }
    return est;
}

} // namespace hypermetric
