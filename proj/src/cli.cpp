#include "hypermetric/cli.hpp"

#include "hypermetric/errors.hpp"
#include "hypermetric/maps.hpp"
#include "hypermetric/metrics.hpp"
#include "hypermetric/moebius.hpp"
#include "hypermetric/quasihyperbolic.hpp"
#include "hypermetric/report_io.hpp"
#include "hypermetric/verify.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

namespace hypermetric::cli {

namespace {

using Json = nlohmann::ordered_json;

inline constexpr int kExitComputation = 3;

struct Config {
    std::string domain = "ball:2";
    std::string metric = "h";
    double c = 2.0;
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    std::string output = "json";
    int precision = 6;
    std::optional<double> tolerance;
    double clearance = kDefaultClearance;
    std::optional<double> k_clearance;
    std::vector<std::string> points;
    std::string suite;
    std::string map = "identity";
    std::string z;
    std::vector<double> radii{1e-1, 1e-2, 1e-3};
    std::size_t samples = 64;
    std::vector<double> grid;
    std::size_t pairs = 0;
    KControls k;
};

void add_domain(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--domain", cfg.domain, "ball:N, halfspace:N, punctured:N or interval:A:B")
        ->capture_default_str();
}

void add_c(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--c", cfg.c, "h-metric parameter c > 0")->capture_default_str();
}

void add_sampling(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--seed", cfg.seed)->capture_default_str();
    cmd->add_option("--count", cfg.count, "number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_output(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--output", cfg.output)
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void add_k_controls(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--spacing", cfg.k.initial_spacing, "initial lattice spacing")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--refinements", cfg.k.refinements)->check(CLI::Range(0, 10))->capture_default_str();
    cmd->add_option("--node-cap", cfg.k.node_cap)->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--stencil", cfg.k.stencil_radius, "stencil radius, 0 = default")
        ->check(CLI::Range(0, 8));
    cmd->add_option("--k-clearance", cfg.k_clearance, "boundary clearance of k sample points")
        ->check(CLI::PositiveNumber);
}

void add_tolerance(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--tolerance", cfg.tolerance)->check(CLI::NonNegativeNumber);
    cmd->add_option("--clearance", cfg.clearance, "smallest boundary distance of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::vector<Point> parse_points(const std::vector<std::string>& text) {
    std::vector<Point> pts;
    pts.reserve(text.size());
    for (const auto& t : text) {
        pts.push_back(parse_point(t));
    }
    return pts;
}

std::pair<Point, Point> two_points(const Config& cfg) {
    const auto pts = parse_points(cfg.points);
    if (pts.size() != 2) {
        throw InvalidArgument("--points expects exactly two points");
    }
    return {pts[0], pts[1]};
}

ScanOptions scan_options(const Config& cfg) {
    ScanOptions o;
    o.tolerance = cfg.tolerance;
    o.clearance = cfg.clearance;
    o.k_controls = cfg.k;
    if (cfg.k_clearance) {
        o.k_clearance = *cfg.k_clearance;
    }
    o.record_slacks = cfg.output == "csv";
    return o;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw InvalidArgument("not a number: '" + text + "'");
    }
    return v;
}

std::size_t parse_dimension(const std::string& text) {
    const double v = parse_real(text);
    if (v < 1.0 || v != std::floor(v)) {
        throw InvalidArgument("dimension must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

// identity | ball-automorphism:a1,..,an | cayley:N | radial:ALPHA:N
SampleMap parse_map(const std::string& text, const std::string& domain) {
    const auto parts = split(text, ':');
    const std::string& kind = parts[0];
    if (kind == "identity" && parts.size() == 1) {
        return SampleMap::identity(parse_domain(domain));
    }
    if (kind == "ball-automorphism" && parts.size() == 2) {
        return SampleMap::moebius(ball_automorphism(parse_point(parts[1])));
    }
    if (kind == "cayley" && parts.size() == 2) {
        return SampleMap::moebius(BallToHalfSpace{parse_dimension(parts[1])});
    }
    if (kind == "radial" && parts.size() == 3) {
        return SampleMap::radial_stretch(parse_real(parts[1]), parse_dimension(parts[2]));
    }
    throw InvalidArgument("unknown map '" + text + "'");
}

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

int emit_report(const InequalityReport& report, const Config& cfg, std::ostream& out) {
    if (cfg.output == "csv") {
        write_slacks_csv(out, report);
    } else {
        out << to_json(report).dump(2) << '\n';
    }
    return report.pass ? kExitPass : kExitFailure;
}

int cmd_dist(const Config& cfg, std::ostream& out) {
    const DomainSpec domain = parse_domain(cfg.domain);
    const MetricKind kind = parse_metric(cfg.metric, MetricParams(cfg.c), cfg.k);
    const auto [x, y] = two_points(cfg);
    out << fixed(evaluate(domain, kind, x, y), cfg.precision) << '\n';
    return kExitPass;
}

int cmd_scan(const Config& cfg, std::ostream& out) {
    const DomainSpec domain = parse_domain(cfg.domain);
    const MetricKind kind = parse_metric(cfg.metric, MetricParams(cfg.c), cfg.k);
    return emit_report(triangle_scan(domain, kind, cfg.count, cfg.seed, scan_options(cfg)), cfg,
                       out);
}

int cmd_suite(const Config& cfg, std::ostream& out) {
    const DomainSpec domain = parse_domain(cfg.domain);
    const Suite suite = parse_suite(cfg.suite);
    return emit_report(
        inequality_suite(suite, domain, MetricParams(cfg.c), cfg.count, cfg.seed, scan_options(cfg)),
        cfg, out);
}

int cmd_falsify(const Config& cfg, std::ostream& out) {
    if (!parse_domain(cfg.domain).is<UnitBall>() || parse_domain(cfg.domain).dimension() != 2) {
        throw InvalidArgument("falsify searches the unit disk; use --domain ball:2");
    }
    Json j;
    if (cfg.metric == "phi") {
        std::vector<double> grid = cfg.grid;
        if (grid.empty()) {
            for (int k = 1; k <= 9; ++k) {
                grid.push_back(k / 10.0);
            }
        }
        j["kind"] = "phi-triangle";
        j["grid_size"] = grid.size();
        try {
            j["violation"] = to_json(phi_triangle_counterexample(grid));
        } catch (const NotFound&) {
            j["violation"] = nullptr;
            out << j.dump(2) << '\n';
            return kExitPass;
        }
        out << j.dump(2) << '\n';
        return kExitFailure;
    }
    if (cfg.metric != "h") {
        throw InvalidArgument("falsify supports --metric h or phi");
    }
    const std::vector<double> grid = cfg.grid.empty() ? default_collinear_grid() : cfg.grid;
    const auto found = collinear_c_scan(cfg.c, grid);
    j["kind"] = "collinear";
    j["c"] = cfg.c;
    j["grid_size"] = grid.size();
    j["violation"] = found ? to_json(*found) : Json(nullptr);
    out << j.dump(2) << '\n';
    return found ? kExitFailure : kExitPass;
}

int cmd_k(const Config& cfg, std::ostream& out) {
    const DomainSpec domain = parse_domain(cfg.domain);
    const auto [x, y] = two_points(cfg);
    const KEstimate est = k_estimate(domain, x, y, cfg.k);
    Json j;
    j["domain"] = cfg.domain;
    j["x"] = to_string(x);
    j["y"] = to_string(y);
    const Json body = to_json(est);
    for (const auto& [key, value] : body.items()) {
        j[key] = value;
    }
    std::optional<double> exact;
    if (domain.is<HalfSpace>()) {
        exact = k_exact_halfspace(x, y);
    } else if (domain.is<PuncturedSpace>()) {
        exact = k_exact_punctured(x, y);
    }
    if (exact) {
        j["exact"] = *exact;
        j["relative_error"] = *exact > 0.0 ? std::abs(est.value - *exact) / *exact : 0.0;
    }
    out << j.dump(2) << '\n';
    return kExitPass;
}

int cmd_dilatation(const Config& cfg, std::ostream& out) {
    const SampleMap map = parse_map(cfg.map, cfg.domain);
    const Point z = cfg.z.empty() ? origin(map.source().dimension()) : parse_point(cfg.z);
    Json j;
    j["map"] = cfg.map;
    j["dilatation"] = to_json(linear_dilatation(map, z, cfg.radii, cfg.samples, cfg.seed));
    if (cfg.pairs > 0) {
        const BilipschitzEstimate b =
            bilipschitz_estimate(map, MetricParams(cfg.c), cfg.pairs, cfg.seed, cfg.clearance);
        j["bilipschitz"] = to_json(b);
        j["L_hat_squared"] = b.L_hat * b.L_hat;
    }
    out << j.dump(2) << '\n';
    return kExitPass;
}

int cmd_uniformity(const Config& cfg, std::ostream& out) {
    const DomainSpec domain = parse_domain(cfg.domain);
    const UniformityEstimate u = uniformity_estimate(
        domain, cfg.count, cfg.seed, cfg.k, cfg.k_clearance.value_or(kQuasihyperbolicClearance));
    Json j;
    j["domain"] = cfg.domain;
    j["seed"] = cfg.seed;
    const Json body = to_json(u);
    for (const auto& [key, value] : body.items()) {
        j[key] = value;
    }
    out << j.dump(2) << '\n';
    return kExitPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Distance-ratio h-metric toolkit", "hypermetric"};
    app.require_subcommand(1);

    auto* dist = app.add_subcommand("dist", "distance between two points");
    add_domain(dist, cfg);
    dist->add_option("--metric", cfg.metric, "h, j, phi, rho-ball, rho-halfspace or k")
        ->capture_default_str();
    add_c(dist, cfg);
    dist->add_option("--points", cfg.points, "two points, e.g. 0,0 0.5,0")->required();
    dist->add_option("--precision", cfg.precision)->check(CLI::Range(0, 15))->capture_default_str();
    add_k_controls(dist, cfg);

    auto* scan = app.add_subcommand("scan-triangle", "seeded triangle-inequality scan");
    add_domain(scan, cfg);
    scan->add_option("--metric", cfg.metric)->capture_default_str();
    add_c(scan, cfg);
    add_sampling(scan, cfg);
    add_output(scan, cfg);
    add_tolerance(scan, cfg);
    add_k_controls(scan, cfg);

    auto* suite = app.add_subcommand("verify-suite", "check one inequality suite");
    suite->add_option("--suite", cfg.suite, "suite id, e.g. T4_6")->required();
    add_domain(suite, cfg);
    add_c(suite, cfg);
    add_sampling(suite, cfg);
    add_output(suite, cfg);
    add_tolerance(suite, cfg);
    add_k_controls(suite, cfg);

    auto* falsify = app.add_subcommand("falsify", "search for triangle violations on the disk");
    add_domain(falsify, cfg);
    falsify->add_option("--metric", cfg.metric, "h (collinear c scan) or phi")->capture_default_str();
    add_c(falsify, cfg);
    falsify->add_option("--grid", cfg.grid, "custom r or t grid");

    auto* kcmd = app.add_subcommand("k-estimate", "grid estimate of the quasihyperbolic distance");
    add_domain(kcmd, cfg);
    kcmd->add_option("--points", cfg.points)->required();
    add_k_controls(kcmd, cfg);

    auto* dil = app.add_subcommand("dilatation", "linear dilatation and bilipschitz constant");
    dil->add_option("--map", cfg.map,
                    "identity, ball-automorphism:A, cayley:N or radial:ALPHA:N")
        ->capture_default_str();
    add_domain(dil, cfg);
    add_c(dil, cfg);
    dil->add_option("--z", cfg.z, "centre point");
    dil->add_option("--radii", cfg.radii, "strictly decreasing radii")->capture_default_str();
    dil->add_option("--samples", cfg.samples, "points per sphere")->capture_default_str();
    dil->add_option("--seed", cfg.seed)->capture_default_str();
    dil->add_option("--count", cfg.pairs, "pairs for the bilipschitz estimate, 0 = skip");
    dil->add_option("--clearance", cfg.clearance)->check(CLI::PositiveNumber);

    auto* uni = app.add_subcommand("uniformity", "estimate the uniformity constant U");
    add_domain(uni, cfg);
    add_sampling(uni, cfg);
    add_k_controls(uni, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }
    if (!(cfg.c > 0.0) || !std::isfinite(cfg.c)) {
        err << "error: --c must be a positive number\n";
        return kExitUsage;
    }

    try {
        if (dist->parsed()) {
            return cmd_dist(cfg, out);
        }
        if (scan->parsed()) {
            return cmd_scan(cfg, out);
        }
        if (suite->parsed()) {
            return cmd_suite(cfg, out);
        }
        if (falsify->parsed()) {
            return cmd_falsify(cfg, out);
        }
        if (kcmd->parsed()) {
            return cmd_k(cfg, out);
        }
        if (dil->parsed()) {
            return cmd_dilatation(cfg, out);
        }
        return cmd_uniformity(cfg, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OutsideDomain& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SuiteMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    }
}

} // namespace hypermetric::cli
