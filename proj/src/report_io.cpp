#include "hypermetric/report_io.hpp"

#include "hypermetric/errors.hpp"

#include <ostream>

namespace hypermetric {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const Point& p) {
    Json a = Json::array();
    for (double v : p.coords()) {
        a.push_back(v);
    }
    return a;
}

Point point_from_json(const Json& j) {
    return Point(j.get<std::vector<double>>());
}

Json optional_point(const Point& p) {
    return p.dimension() == 0 ? Json() : point_json(p);
}

} // namespace

Json to_json(const InequalityReport& report) {
    Json j;
    j["suite_id"] = report.suite_id;
    j["domain"] = to_string(report.domain);
    j["params"] = Json{{"c", report.params.c}};
    j["seed"] = report.seed;
    j["sample_count"] = report.sample_count;
    j["min_slack"] = report.min_slack;
    Json witness = Json::array();
    for (const auto& p : report.witness) {
        witness.push_back(point_json(p));
    }
    j["witness"] = std::move(witness);
    j["pass"] = report.pass;
    j["tolerance"] = report.tolerance;
    Json extras = Json::object();
    for (const auto& [key, value] : report.extras) {
        extras[key] = value;
    }
    j["extras"] = std::move(extras);
    return j;
}

InequalityReport report_from_json(const Json& j) {
    try {
        InequalityReport r;
        r.suite_id = j.at("suite_id").get<std::string>();
        r.domain = parse_domain(j.at("domain").get<std::string>());
        r.params = MetricParams(j.at("params").at("c").get<double>());
        r.seed = j.at("seed").get<std::uint64_t>();
        r.sample_count = j.at("sample_count").get<std::size_t>();
        r.min_slack = j.at("min_slack").get<double>();
        for (const auto& p : j.at("witness")) {
            r.witness.push_back(point_from_json(p));
        }
        r.pass = j.at("pass").get<bool>();
        r.tolerance = j.at("tolerance").get<double>();
        if (j.contains("extras")) {
            for (const auto& [key, value] : j.at("extras").items()) {
                r.extras[key] = value.get<double>();
            }
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed report: ") + e.what());
    }
}

Json to_json(const KEstimate& estimate) {
    Json history = Json::array();
    for (const auto& [spacing, value] : estimate.refinement_history) {
        history.push_back(Json{{"spacing", spacing}, {"value", value}});
    }
    return Json{{"value", estimate.value},
                {"spacing", estimate.spacing},
                {"refinement_history", std::move(history)}};
}

Json to_json(const DilatationEstimate& estimate) {
    return Json{{"z", point_json(estimate.z)},
                {"radii", estimate.radii},
                {"ratios", estimate.ratios},
                {"H_hat", estimate.H_hat}};
}

Json to_json(const UniformityEstimate& estimate) {
    return Json{{"U_hat", estimate.U_hat},
                {"sample_count", estimate.sample_count},
                {"worst_x", optional_point(estimate.worst_x)},
                {"worst_y", optional_point(estimate.worst_y)}};
}

Json to_json(const BilipschitzEstimate& estimate) {
    return Json{{"L_hat", estimate.L_hat},
                {"pair_count", estimate.pair_count},
                {"worst_x", optional_point(estimate.worst_x)},
                {"worst_y", optional_point(estimate.worst_y)}};
}

Json to_json(const CollinearViolation& violation) {
    return Json{{"r", violation.r}, {"lhs", violation.lhs}, {"rhs", violation.rhs}};
}

Json to_json(const PhiWitness& witness) {
    return Json{{"t", witness.t}, {"lhs", witness.lhs}, {"rhs", witness.rhs}};
}

void write_slacks_csv(std::ostream& out, const InequalityReport& report) {
    out << "index,slack\n";
    for (std::size_t i = 0; i < report.slacks.size(); ++i) {
        out << i << ',' << format_shortest(report.slacks[i]) << '\n';
    }
}

} // namespace hypermetric
