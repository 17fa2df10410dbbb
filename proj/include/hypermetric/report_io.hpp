#pragma once

// JSON and CSV serialization of reports and estimates.

#include "hypermetric/maps.hpp"
#include "hypermetric/quasihyperbolic.hpp"
#include "hypermetric/verify.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace hypermetric {

[[nodiscard]] nlohmann::ordered_json to_json(const InequalityReport& report);
/// Throws InvalidArgument on missing or mistyped fields.
[[nodiscard]] InequalityReport report_from_json(const nlohmann::ordered_json& j);

[[nodiscard]] nlohmann::ordered_json to_json(const KEstimate& estimate);
[[nodiscard]] nlohmann::ordered_json to_json(const DilatationEstimate& estimate);
[[nodiscard]] nlohmann::ordered_json to_json(const UniformityEstimate& estimate);
[[nodiscard]] nlohmann::ordered_json to_json(const BilipschitzEstimate& estimate);
[[nodiscard]] nlohmann::ordered_json to_json(const CollinearViolation& violation);
[[nodiscard]] nlohmann::ordered_json to_json(const PhiWitness& witness);

/// Header "index,slack" followed by one row per recorded slack.
void write_slacks_csv(std::ostream& out, const InequalityReport& report);

} // namespace hypermetric
