#include "hypermetric/verify.hpp"

#include "hypermetric/errors.hpp"
#include "parallel.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypermetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slack of lhs <= rhs, scaled down for magnitudes above 1 so a fixed tolerance
// tracks relative rounding error.
double scaled_slack(double lhs, double rhs) {
    return (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double relative_slack(double lhs, double rhs) {
    return (rhs - lhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

// Moves `lo` toward the boundary along the ray: z + s u with s in [0, extent).
double hugging_fraction(detail::Rng& rng) {
    return 1.0 - std::pow(10.0, -6.0 * detail::uniform(rng, 0.0, 1.0));
}

std::array<Point, 3> collinear_triple(const DomainSpec& domain, detail::Rng& rng, double clearance) {
    const SamplingBox box = sampling_box(domain);
    double cap = 0.0;
    for (std::size_t d = 0; d < box.lower.size(); ++d) {
        cap += (box.upper[d] - box.lower[d]) * (box.upper[d] - box.lower[d]);
    }
    cap = std::sqrt(cap);
    for (;;) {
        Point z = detail::sample_with_clearance(domain, rng, clearance);
        const Point u = detail::random_direction(rng, domain.dimension());
        const double forward = detail::ray_extent(domain, z, u, cap);
        const double backward = detail::ray_extent(domain, z, -1.0 * u, cap);
        Point x = z + (forward * hugging_fraction(rng)) * u;
        Point y = z - (backward * hugging_fraction(rng)) * u;
        if (contains(domain, x) && contains(domain, y) &&
            boundary_distance(domain, x) >= clearance && boundary_distance(domain, y) >= clearance) {
            return {std::move(x), std::move(y), std::move(z)};
        }
    }
}

Point hugging_point(const DomainSpec& domain, detail::Rng& rng, double clearance) {
    for (;;) {
        Point p = detail::sample_near_boundary(domain, rng, std::max(clearance, 1e-6), 0.1);
        if (contains(domain, p) && boundary_distance(domain, p) >= clearance) {
            return p;
        }
    }
}

struct Evaluated {
    double slack = kInf;
    std::vector<Point> witness;
    std::map<std::string, double> extras;
};

InequalityReport reduce(std::string id, const DomainSpec& domain, const MetricParams& params,
                        std::uint64_t seed, double tolerance, const std::vector<Evaluated>& rows,
                        bool record_slacks) {
    InequalityReport report;
    report.suite_id = std::move(id);
    report.domain = domain;
    report.params = params;
    report.seed = seed;
    report.tolerance = tolerance;
    report.sample_count = rows.size();
    report.min_slack = kInf;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].slack < report.min_slack) {
            report.min_slack = rows[i].slack;
            worst = i;
        }
        for (const auto& [key, value] : rows[i].extras) {
            auto [it, inserted] = report.extras.emplace(key, value);
            if (!inserted) {
                it->second = std::max(it->second, value);
            }
        }
        if (record_slacks) {
            report.slacks.push_back(rows[i].slack);
        }
    }
    if (!rows.empty()) {
        report.witness = rows[worst].witness;
    } else {
        report.min_slack = 0.0;
    }
    report.pass = report.min_slack >= -tolerance;
    return report;
}

MetricParams params_of(const MetricKind& kind) {
    if (const auto* h = std::get_if<metric_kind::H>(&kind)) {
        return h->params;
    }
    return MetricParams{};
}

std::vector<std::pair<Point, Point>> sample_pairs(const DomainSpec& domain, std::size_t count,
                                                  std::uint64_t seed, double clearance) {
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(count);
    for (auto& t : sample_triples(domain, count, seed, clearance)) {
        pairs.emplace_back(std::move(t[0]), std::move(t[1]));
    }
    return pairs;
}

std::vector<std::pair<Point, Point>> sample_clear_pairs(const DomainSpec& domain, std::size_t count,
                                                        std::uint64_t seed, double clearance) {
    const auto pts = sample_interior(domain, 2 * count, seed, clearance);
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        pairs.emplace_back(pts[2 * i], pts[2 * i + 1]);
    }
    return pairs;
}

// Seed of an auxiliary stream; disjoint from the main stream of the same seed.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::vector<std::array<Point, 3>> sample_triples(const DomainSpec& domain, std::size_t count,
                                                 std::uint64_t seed, double clearance) {
    if (count == 0) {
        throw InvalidArgument("sample count must be at least 1");
    }
    // validates feasibility of the clearance up front
    (void)sample_interior(domain, 1, seed, clearance);
    detail::Rng rng(seed);
    std::vector<std::array<Point, 3>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t stratum = i % 20;
        if (stratum < 12) {
            Point x = detail::sample_with_clearance(domain, rng, clearance);
            Point y = detail::sample_with_clearance(domain, rng, clearance);
            Point z = detail::sample_with_clearance(domain, rng, clearance);
            out.push_back({std::move(x), std::move(y), std::move(z)});
        } else if (stratum < 17) {
            Point x = hugging_point(domain, rng, clearance);
            Point y = hugging_point(domain, rng, clearance);
            Point z = detail::uniform(rng, 0.0, 1.0) < 0.5
                          ? hugging_point(domain, rng, clearance)
                          : detail::sample_with_clearance(domain, rng, clearance);
            out.push_back({std::move(x), std::move(y), std::move(z)});
        } else {
            out.push_back(collinear_triple(domain, rng, clearance));
        }
    }
    return out;
}

InequalityReport triangle_scan(const DomainSpec& domain, const MetricKind& metric,
                               std::size_t triple_count, std::uint64_t seed,
                               const ScanOptions& options) {
    const bool grid_metric = std::holds_alternative<metric_kind::QuasiHyperbolic>(metric);
    const double clearance = grid_metric ? std::max(options.clearance, options.k_clearance)
                                         : options.clearance;
    const auto triples = sample_triples(domain, triple_count, seed, clearance);
    std::vector<Evaluated> rows(triples.size());
    detail::parallel_for(triples.size(), [&](std::size_t i) {
        const auto& [x, y, z] = triples[i];
        const double xz = evaluate(domain, metric, x, z);
        const double zy = evaluate(domain, metric, z, y);
        const double xy = evaluate(domain, metric, x, y);
        rows[i].slack = grid_metric ? relative_slack(xy, xz + zy) : xz + zy - xy;
        rows[i].witness = {x, y, z};
    });
    const double tol = options.tolerance.value_or(grid_metric ? kQuasihyperbolicTolerance
                                                              : kClosedFormTolerance);
    return reduce("triangle:" + metric_name(metric), domain, params_of(metric), seed, tol, rows,
                  options.record_slacks);
}

TriangleWitness triangle_witness(const InequalityReport& report, const MetricKind& metric) {
    if (report.witness.size() < 3) {
        throw InvalidArgument("report does not carry a triangle witness");
    }
    return TriangleWitness{report.witness[0], report.witness[1], report.witness[2],
                           report.min_slack, metric};
}

std::optional<CollinearViolation> collinear_c_scan(double c, std::vector<double> r_grid) {
    const MetricParams params(c);
    for (double r : r_grid) {
        if (!(r > 0.0 && r < 1.0)) {
            throw InvalidArgument("collinear scan radii must lie in (0, 1)");
        }
    }
    std::sort(r_grid.begin(), r_grid.end());
    const DomainSpec disk = UnitBall{2};
    const Point zero{0.0, 0.0};
    for (double r : r_grid) {
        const Point p{r, 0.0};
        const Point q{-r, 0.0};
        const double lhs = 2.0 * h_metric(disk, params, zero, p);
        const double rhs = h_metric(disk, params, q, p);
        if (lhs < rhs) {
            return CollinearViolation{r, lhs, rhs};
        }
    }
    return std::nullopt;
}

std::vector<double> default_collinear_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 9999; ++k) {
        grid.push_back(k / 10000.0);
    }
    for (int j = 41; j <= 80; ++j) {
        grid.push_back(1.0 - std::pow(10.0, -j / 10.0));
    }
    return grid;
}

PhiWitness phi_triangle_counterexample(const std::vector<double>& t_grid) {
    if (t_grid.empty()) {
        throw InvalidArgument("t grid must be nonempty");
    }
    const DomainSpec disk = UnitBall{2};
    const Point zero{0.0, 0.0};
    std::optional<PhiWitness> worst;
    double worst_slack = 0.0;
    for (double t : t_grid) {
        if (!(t > 0.0 && t < 1.0)) {
            throw InvalidArgument("phi counterexample grid must lie in (0, 1)");
        }
        const Point p{t, 0.0};
        const Point q{-t, 0.0};
        const double lhs = phi_quantity(disk, p, zero) + phi_quantity(disk, zero, q);
        const double rhs = phi_quantity(disk, p, q);
        const double slack = lhs - rhs;
        const double noise = 16.0 * std::numeric_limits<double>::epsilon() * rhs;
        if (slack < -noise && (!worst || slack < worst_slack)) {
            worst = PhiWitness{t, lhs, rhs};
            worst_slack = slack;
        }
    }
    if (!worst) {
        throw NotFound("no phi triangle violation on the grid; refine it toward t = 1");
    }
    return *worst;
}

std::string suite_id(Suite suite) {
    switch (suite) {
    case Suite::HalfSpaceIdentity:
        return "P2_3_1";
    case Suite::BallSandwich:
        return "P2_3_2";
    case Suite::BallAutomorphismDistortion:
        return "L2_5";
    case Suite::CayleyDistortion:
        return "L2_7";
    case Suite::ComparisonFunctionBounds:
        return "P2_8";
    case Suite::PhiJChain:
        return "L2_9";
    case Suite::HPhiJChain:
        return "C2_10";
    case Suite::SetDistanceLipschitz:
        return "L3_1";
    case Suite::HJComparison:
        return "L4_4_1";
    case Suite::LocalHJComparison:
        return "L4_4_2";
    case Suite::QuasihyperbolicSandwich:
        return "C4_5";
    case Suite::HyperbolicComparison:
        return "T4_6";
    case Suite::QuasihyperbolicLowerBound:
        return "QHJ";
    }
    throw InvalidArgument("unknown suite");
}

std::vector<Suite> all_suites() {
    return {Suite::HalfSpaceIdentity,       Suite::BallSandwich,
            Suite::BallAutomorphismDistortion, Suite::CayleyDistortion,
            Suite::ComparisonFunctionBounds, Suite::PhiJChain,
            Suite::HPhiJChain,              Suite::SetDistanceLipschitz,
            Suite::HJComparison,            Suite::LocalHJComparison,
            Suite::QuasihyperbolicSandwich, Suite::HyperbolicComparison,
            Suite::QuasihyperbolicLowerBound};
}

Suite parse_suite(const std::string& id) {
    for (Suite s : all_suites()) {
        if (suite_id(s) == id) {
            return s;
        }
    }
    throw InvalidArgument("unknown suite '" + id + "'");
}

bool suite_applies(Suite suite, const DomainSpec& domain) {
    switch (suite) {
    case Suite::HalfSpaceIdentity:
        return domain.is<HalfSpace>();
    case Suite::BallSandwich:
    case Suite::BallAutomorphismDistortion:
    case Suite::CayleyDistortion:
        return domain.is<UnitBall>();
    case Suite::HyperbolicComparison:
        return domain.is<UnitBall>() || domain.is<HalfSpace>();
    case Suite::QuasihyperbolicSandwich:
    case Suite::QuasihyperbolicLowerBound:
        return domain.dimension() <= 3;
    default:
        return true;
    }
}

double default_tolerance(Suite suite) {
    switch (suite) {
    case Suite::SetDistanceLipschitz:
        return kLipschitzTolerance;
    case Suite::QuasihyperbolicSandwich:
    case Suite::QuasihyperbolicLowerBound:
        return kQuasihyperbolicTolerance;
    default:
        return kClosedFormTolerance;
    }
}

InequalityReport inequality_suite(Suite suite, const DomainSpec& domain, const MetricParams& params,
                                  std::size_t pair_count, std::uint64_t seed,
                                  const ScanOptions& options) {
    if (!suite_applies(suite, domain)) {
        throw SuiteMismatch("suite " + suite_id(suite) + " does not apply to " + to_string(domain));
    }
    if (pair_count == 0) {
        throw InvalidArgument("pair count must be at least 1");
    }
    const double tol = options.tolerance.value_or(default_tolerance(suite));
    const double c = params.c;
    std::vector<Evaluated> rows(pair_count);
    auto finish = [&](MetricParams reported) {
        return reduce(suite_id(suite), domain, reported, seed, tol, rows, options.record_slacks);
    };

    switch (suite) {
    case Suite::HalfSpaceIdentity: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            // sqrt(2(cosh rho - 1)) written as 2 sinh(rho/2)
            const double lhs = 2.0 * std::sinh(0.5 * rho_halfspace(x, y));
            const double rhs = std::expm1(h_metric(domain, params, x, y)) / c;
            rows[i].slack = -std::abs(lhs - rhs) / std::max({1.0, lhs, rhs});
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::BallSandwich: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double sh = std::sinh(0.5 * rho_ball(x, y));
            const double u = std::expm1(h_metric(domain, params, x, y)) / c;
            rows[i].slack = std::min(scaled_slack(sh, u), scaled_slack(u, 2.0 * sh));
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::BallAutomorphismDistortion:
    case Suite::CayleyDistortion: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        std::vector<MoebiusMap> maps;
        if (suite == Suite::CayleyDistortion) {
            maps.emplace_back(BallToHalfSpace{domain.dimension()});
        } else {
            const auto centres = sample_interior(domain, kAutomorphismCount,
                                                 derived_seed(seed, 1), 0.05);
            for (const auto& a : centres) {
                maps.push_back(ball_automorphism(a));
            }
        }
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const MoebiusMap& g = maps[i % maps.size()];
            const DomainSpec target = moebius_target(g, domain);
            const double before = h_metric(domain, params, x, y);
            const double after = h_metric(target, params, apply_moebius(g, x), apply_moebius(g, y));
            rows[i].slack = scaled_slack(after, 2.0 * before);
            rows[i].witness = {x, y};
            if (before > 0.0) {
                rows[i].extras["max_ratio"] = after / before;
            }
        });
        return finish(params);
    }
    case Suite::ComparisonFunctionBounds: {
        if (c < 0.5) {
            throw SuiteMismatch("comparison-function bounds need c >= 1/2");
        }
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const double frac = pair_count == 1 ? 0.0
                                                : static_cast<double>(i) /
                                                      static_cast<double>(pair_count - 1);
            const double t = 1e-6 * std::pow(50.0 / 1e-6, frac);
            const double f = comparison_f(t, c);
            const double lower = c * t / (2.0 * (1.0 + c));
            const double upper = c * t;
            rows[i].slack = std::min(scaled_slack(lower, f), scaled_slack(f, upper));
            rows[i].witness = {Point{t}};
        });
        return finish(params);
    }
    case Suite::PhiJChain: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double j = j_metric(domain, x, y);
            const double phi = phi_quantity(domain, x, y);
            rows[i].slack = std::min(scaled_slack(0.5 * j, phi), scaled_slack(phi, 2.0 * j));
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::HPhiJChain: {
        const MetricParams one(1.0);
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double j = j_metric(domain, x, y);
            const double h1 = h_metric(domain, one, x, y);
            const double phi = phi_quantity(domain, x, y);
            rows[i].slack = std::min({scaled_slack(0.5 * j, h1), scaled_slack(h1, phi),
                                      scaled_slack(phi, 2.0 * h1), scaled_slack(2.0 * h1, 2.0 * j)});
            rows[i].witness = {x, y};
        });
        return finish(one);
    }
    case Suite::SetDistanceLipschitz: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        detail::Rng rng(derived_seed(seed, 2));
        const PointSet set(detail::sample_complement(domain, rng, 8));
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double r = distance(x, y);
            const double dx = boundary_distance(domain, x);
            const double dy = boundary_distance(domain, y);
            const double ax = distance_to_set(x, set);
            const double ay = distance_to_set(y, set);
            rows[i].slack = std::min({r + dy - dx, r + dx - dy, r + ay - ax, r + ax - ay});
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::HJComparison: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double j = j_metric(domain, x, y);
            const double h = h_metric(domain, params, x, y);
            const double f = comparison_f(j, c);
            rows[i].slack = std::min({scaled_slack(c / (2.0 * (1.0 + c)) * j, f),
                                      scaled_slack(f, h), scaled_slack(h, c * j)});
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::LocalHJComparison: {
        detail::Rng rng(seed);
        struct Sample {
            Point x;
            Point y;
            double lambda;
        };
        std::vector<Sample> samples;
        samples.reserve(pair_count);
        for (std::size_t i = 0; i < pair_count; ++i) {
            Point x = detail::sample_with_clearance(domain, rng, options.clearance);
            const double lambda = detail::uniform(rng, 1e-6, 1.0);
            const double radius = lambda * boundary_distance(domain, x);
            Point y = detail::uniform_in_ball(rng, x, radius);
            samples.push_back({std::move(x), std::move(y), lambda});
        }
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& s = samples[i];
            const double j = j_metric(domain, s.x, s.y);
            const double h = h_metric(domain, params, s.x, s.y);
            rows[i].slack = scaled_slack((1.0 - s.lambda) / (1.0 + s.lambda) * j, h);
            rows[i].witness = {s.x, s.y, Point{s.lambda}};
        });
        return finish(params);
    }
    case Suite::HyperbolicComparison: {
        const auto pairs = sample_pairs(domain, pair_count, seed, options.clearance);
        const bool ball = domain.is<UnitBall>();
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double rho = ball ? rho_ball(x, y) : rho_halfspace(x, y);
            const double h = h_metric(domain, params, x, y);
            rows[i].slack = std::min(scaled_slack(h / c, rho), scaled_slack(rho, 2.0 * h));
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::QuasihyperbolicLowerBound: {
        const auto pairs = sample_clear_pairs(domain, pair_count, seed, options.k_clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double k = k_estimate(domain, x, y, options.k_controls).value;
            const double j = j_metric(domain, x, y);
            rows[i].slack = relative_slack(j, k);
            rows[i].witness = {x, y};
        });
        return finish(params);
    }
    case Suite::QuasihyperbolicSandwich: {
        const UniformityEstimate u = uniformity_estimate(
            domain, pair_count, derived_seed(seed, 3), options.k_controls, options.k_clearance);
        const double d = c / (2.0 * (1.0 + c) * u.U_hat);
        const auto pairs = sample_clear_pairs(domain, pair_count, seed, options.k_clearance);
        detail::parallel_for(pair_count, [&](std::size_t i) {
            const auto& [x, y] = pairs[i];
            const double k = k_estimate(domain, x, y, options.k_controls).value;
            const double h = h_metric(domain, params, x, y);
            rows[i].slack = std::min(relative_slack(d * k, h), relative_slack(h, c * k));
            rows[i].witness = {x, y};
        });
        InequalityReport report = finish(params);
        report.extras["U_hat"] = u.U_hat;
        report.extras["d"] = d;
        return report;
    }
    }
    throw InvalidArgument("unknown suite");
}

InequalityReport check_growth_bound(const MetricSpec& source, const MetricSpec& target, double coef,
                                    double exponent, std::span<const std::pair<Point, Point>> pairs,
                                    const std::optional<SampleMap>& map, double tolerance) {
    if (!(coef > 0.0)) {
        throw InvalidArgument("growth coefficient must be positive");
    }
    if (!(exponent > 0.0 && exponent <= 1.0)) {
        throw InvalidArgument("growth exponent must lie in (0, 1]");
    }
    std::vector<Evaluated> rows(pairs.size());
    detail::parallel_for(pairs.size(), [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        const double ms = evaluate(source.domain, source.kind, x, y);
        const Point fx = map ? apply_map(*map, x) : x;
        const Point fy = map ? apply_map(*map, y) : y;
        const double mt = evaluate(target.domain, target.kind, fx, fy);
        const double bound = coef * std::max(ms, std::pow(ms, exponent));
        rows[i].slack = scaled_slack(mt, bound);
        rows[i].witness = {x, y};
        if (bound > 0.0) {
            rows[i].extras["max_ratio"] = mt / bound;
        }
    });
    return reduce("growth-bound", source.domain, params_of(source.kind), 0, tolerance, rows, false);
}

double growth_coefficient_from_j_bound(double a, double c) {
    if (!(a > 0.0 && a < 1.0) || !(c > 0.0)) {
        throw InvalidArgument("need 0 < a < 1 and c > 0");
    }
    return 2.0 * (1.0 + c) / a;
}

double growth_coefficient_quasiconformal(double c1, double c, double U) {
    if (!(c1 > 0.0) || !(c > 0.0) || !(U >= 1.0)) {
        throw InvalidArgument("need c1 > 0, c > 0 and U >= 1");
    }
    return 2.0 * c1 * (1.0 + c) * U;
}

UniformityEstimate uniformity_estimate(const DomainSpec& domain, std::size_t pair_count,
                                       std::uint64_t seed, const KControls& controls,
                                       double clearance) {
    if (pair_count == 0) {
        throw InvalidArgument("pair count must be at least 1");
    }
    const auto pairs = sample_clear_pairs(domain, pair_count, seed, clearance);
    std::vector<double> ratio(pair_count, -1.0);
    detail::parallel_for(pair_count, [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        const double j = j_metric(domain, x, y);
        if (j > 1e-6) {
            ratio[i] = k_estimate(domain, x, y, controls).value / j;
        }
    });
    UniformityEstimate est;
    double best = -1.0;
    for (std::size_t i = 0; i < pair_count; ++i) {
        if (ratio[i] < 0.0) {
            continue;
        }
        ++est.sample_count;
        if (ratio[i] > best) {
            best = ratio[i];
            est.worst_x = pairs[i].first;
            est.worst_y = pairs[i].second;
        }
    }
    if (est.sample_count == 0) {
        throw DegenerateConfiguration("every sampled pair has j below 1e-6");
    }
    est.U_hat = std::max(1.0, best);
    return est;
}

} // namespace hypermetric
