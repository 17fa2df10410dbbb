#pragma once

// Quasihyperbolic distance k_G(x,y) = inf over arcs of the integral of |dz| / d(z).
//
// k_estimate discretizes the domain into a lattice graph whose edge weights are
// trapezoidal approximations of the arc-length integral and runs Dijkstra on it.
// Exact values are available for the half-space and the punctured space and are
// used as oracles.

#include "hypermetric/domain.hpp"
#include "hypermetric/point.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace hypermetric {

struct KControls {
    double initial_spacing = 0.05;
    int refinements = 2;
    std::size_t node_cap = 2'000'000;
    /// Lattice offsets with max-norm <= stencil_radius and coprime entries form the
    /// neighbourhood of a node. 0 selects a per-dimension default.
    int stencil_radius = 0;
};

/// Stencil radius used when KControls::stencil_radius is 0.
[[nodiscard]] int default_stencil_radius(std::size_t dimension);

struct KEstimate {
    double value = 0.0;
    double spacing = 0.0;
    /// (spacing, value) per level, coarsest first.
    std::vector<std::pair<double, double>> refinement_history;
};

/// Lattice discretization of a domain window.
///
/// Nodes are lattice points i*spacing (global lattice, so the grid does not depend
/// on the order of the query points) inside the window with d >= spacing/2.
/// Edges join nodes whose index offset is in the stencil; the weight of an edge
/// u-v is |u-v| (1/d(u) + 1/d(v)) / 2.
class GeodesicGrid {
public:
    /// Builds the grid for a query between x and y. Throws ResourceExceeded when the
    /// window holds more than controls.node_cap lattice points.
    GeodesicGrid(const DomainSpec& domain, const Point& x, const Point& y, double spacing,
                 const KControls& controls);

    [[nodiscard]] const DomainSpec& domain() const noexcept { return domain_; }
    [[nodiscard]] double spacing() const noexcept { return spacing_; }
    [[nodiscard]] std::size_t node_count() const noexcept { return node_count_; }
    [[nodiscard]] std::size_t lattice_size() const noexcept { return inv_d_.size(); }

    /// Whether lattice slot i is a node.
    [[nodiscard]] bool is_node(std::size_t i) const { return inv_d_[i] > 0.0; }
    [[nodiscard]] Point node_point(std::size_t i) const;

    /// Calls fn(j, weight) for every edge i-j.
    void for_each_edge(std::size_t i, const std::function<void(std::size_t, double)>& fn) const;

    /// Shortest weighted path between two points in the domain. The points join the
    /// graph through edges to every node within the stencil reach.
    [[nodiscard]] double shortest_path(const Point& x, const Point& y) const;

private:
    static constexpr std::size_t kMaxDim = 3;
    using Index = std::array<std::int64_t, kMaxDim>;

    struct Offset {
        Index delta{};
        std::int64_t linear = 0;
        double length = 0.0;
    };

    [[nodiscard]] Index unflatten(std::size_t i) const;
    [[nodiscard]] bool neighbour(std::size_t i, const Index& idx, const Offset& off,
                                 std::size_t& j) const;
    [[nodiscard]] bool edge_admissible(std::size_t i, std::size_t j) const;
    [[nodiscard]] bool segment_admissible(const Point& a, const Point& b) const;
    /// (node, weight) edges joining an off-lattice point to the grid.
    [[nodiscard]] std::vector<std::pair<std::size_t, double>> attach(const Point& p) const;

    DomainSpec domain_;
    double spacing_;
    std::size_t dim_;
    Index origin_index_{};
    Index extent_{};
    Index stride_{};
    std::vector<double> inv_d_;
    std::size_t node_count_ = 0;
    std::vector<Offset> stencil_;
    double reach_ = 0.0;
    double inner_radius_ = 0.0;
    double outer_radius_ = 0.0;
};

/// k for the upper half-space; equals rho_halfspace.
[[nodiscard]] double k_exact_halfspace(const Point& x, const Point& y);

/// k for R^n minus the origin: sqrt(theta^2 + log^2(|x|/|y|)), theta the angle between x and y.
[[nodiscard]] double k_exact_punctured(const Point& x, const Point& y);

/// Grid estimate of k_G(x,y), refined `refinements` times by halving the spacing.
[[nodiscard]] KEstimate k_estimate(const DomainSpec& domain, const Point& x, const Point& y,
                                   const KControls& controls = {});

} // namespace hypermetric
