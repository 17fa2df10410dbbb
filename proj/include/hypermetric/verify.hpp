#pragma once

// Seeded verification and falsification of metric inequalities.
//
// Every scan first draws its samples sequentially from one seeded generator and
// then evaluates them (possibly on several threads). Reductions run in sample
// order, so reports do not depend on the thread count.

#include "hypermetric/domain.hpp"
#include "hypermetric/maps.hpp"
#include "hypermetric/metrics.hpp"
#include "hypermetric/point.hpp"
#include "hypermetric/quasihyperbolic.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypermetric {

inline constexpr double kClosedFormTolerance = 1e-9;
inline constexpr double kLipschitzTolerance = 1e-12;
/// Relative tolerance of inequalities that involve the grid estimate of k.
inline constexpr double kQuasihyperbolicTolerance = 0.02;
/// Default clearance of sample points for k-based checks.
inline constexpr double kQuasihyperbolicClearance = 0.2;

struct InequalityReport {
    std::string suite_id;
    DomainSpec domain = UnitBall{2};
    MetricParams params;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    /// Smallest slack over the sample; negative values are violations.
    double min_slack = 0.0;
    /// Points realizing min_slack (pair or triple, plus suite-specific extras).
    std::vector<Point> witness;
    bool pass = true;
    double tolerance = kClosedFormTolerance;
    /// Suite-specific observed constants (extremal ratios, estimated U, ...).
    std::map<std::string, double> extras;
    /// Per-sample slacks in sample order; filled only when requested, never serialized to JSON.
    std::vector<double> slacks;

    friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

struct TriangleWitness {
    Point x;
    Point y;
    Point z;
    /// m(x,z) + m(z,y) - m(x,y)
    double slack = 0.0;
    MetricKind metric;
    [[nodiscard]] bool is_violation() const noexcept { return slack < 0.0; }
};

struct ScanOptions {
    /// Overrides the suite's default tolerance.
    std::optional<double> tolerance;
    /// Smallest boundary distance of sampled points.
    double clearance = kDefaultClearance;
    KControls k_controls;
    double k_clearance = kQuasihyperbolicClearance;
    bool record_slacks = false;
};

/// Samples `count` triples in the fixed 60/25/15 mix of uniform, boundary-hugging and
/// collinear-through-a-common-point configurations. Each triple is (x, y, z) with z the
/// middle vertex.
[[nodiscard]] std::vector<std::array<Point, 3>> sample_triples(const DomainSpec& domain,
                                                              std::size_t count, std::uint64_t seed,
                                                              double clearance = kDefaultClearance);

[[nodiscard]] InequalityReport triangle_scan(const DomainSpec& domain, const MetricKind& metric,
                                             std::size_t triple_count, std::uint64_t seed,
                                             const ScanOptions& options = {});

/// Worst triple of the last triangle_scan-style evaluation, in witness form.
[[nodiscard]] TriangleWitness triangle_witness(const InequalityReport& report,
                                               const MetricKind& metric);

struct CollinearViolation {
    double r = 0.0;
    /// 2 h(0, r e1)
    double lhs = 0.0;
    /// h(-r e1, r e1)
    double rhs = 0.0;
};

/// Smallest r of the grid with 2 h_{B^2,c}(0, r) < h_{B^2,c}(-r, r), if any.
[[nodiscard]] std::optional<CollinearViolation> collinear_c_scan(double c,
                                                                 std::vector<double> r_grid);

/// r = k * 1e-4 up to 0.9999, then 1 - 10^(-j/10) down to 1 - 1e-8.
[[nodiscard]] std::vector<double> default_collinear_grid();

struct PhiWitness {
    double t = 0.0;
    /// 2 phi(t e1, 0)
    double lhs = 0.0;
    /// phi(t e1, -t e1)
    double rhs = 0.0;
};

/// Grid point with the most negative slack 2 phi(t,0) - phi(t,-t) on the unit disk.
/// Differences within rounding noise of rhs are not counted; throws NotFound when the
/// grid holds no violation.
[[nodiscard]] PhiWitness phi_triangle_counterexample(const std::vector<double>& t_grid);

enum class Suite {
    HalfSpaceIdentity,
    BallSandwich,
    BallAutomorphismDistortion,
    CayleyDistortion,
    ComparisonFunctionBounds,
    PhiJChain,
    HPhiJChain,
    SetDistanceLipschitz,
    HJComparison,
    LocalHJComparison,
    QuasihyperbolicSandwich,
    HyperbolicComparison,
    QuasihyperbolicLowerBound
};

[[nodiscard]] std::string suite_id(Suite suite);
[[nodiscard]] Suite parse_suite(const std::string& id);
[[nodiscard]] std::vector<Suite> all_suites();
[[nodiscard]] bool suite_applies(Suite suite, const DomainSpec& domain);
[[nodiscard]] double default_tolerance(Suite suite);

/// Number of ball automorphisms cycled through by BallAutomorphismDistortion.
inline constexpr std::size_t kAutomorphismCount = 20;

[[nodiscard]] InequalityReport inequality_suite(Suite suite, const DomainSpec& domain,
                                                const MetricParams& params,
                                                std::size_t pair_count, std::uint64_t seed,
                                                const ScanOptions& options = {});

struct MetricSpec {
    DomainSpec domain;
    MetricKind kind;
};

/// Checks m_target(f x, f y) <= coef * max(m_source(x,y), m_source(x,y)^exponent) on every
/// pair; f is the identity when `map` is empty. extras["max_ratio"] holds the largest
/// m_target / bound.
[[nodiscard]] InequalityReport check_growth_bound(const MetricSpec& source,
                                                  const MetricSpec& target, double coef,
                                                  double exponent,
                                                  std::span<const std::pair<Point, Point>> pairs,
                                                  const std::optional<SampleMap>& map = {},
                                                  double tolerance = kClosedFormTolerance);

/// 1/A for a homeomorphism with j_{fG} <= (1/a) max(j_G, j_G^a): A = a / (2(1+c)).
[[nodiscard]] double growth_coefficient_from_j_bound(double a, double c);

/// 1/e for a K-quasiconformal map of a uniform domain: e = 1 / (2 c1 (1+c) U).
[[nodiscard]] double growth_coefficient_quasiconformal(double c1, double c, double U);

struct UniformityEstimate {
    double U_hat = 1.0;
    std::size_t sample_count = 0;
    Point worst_x;
    Point worst_y;
};

/// U_hat = max(1, max over sampled pairs with j > 1e-6 of k_estimate / j).
[[nodiscard]] UniformityEstimate uniformity_estimate(const DomainSpec& domain,
                                                     std::size_t pair_count, std::uint64_t seed,
                                                     const KControls& controls = {},
                                                     double clearance = kQuasihyperbolicClearance);

} // namespace hypermetric
