#pragma once

// Machine-readable (JSON) and plain-text renderings of analysis results.
// nlohmann::json objects keep keys sorted, so dumps are deterministic.

#include <string>

#include <json.hpp>

#include "qgr/counting.hpp"
#include "qgr/tube.hpp"

namespace qgr {

nlohmann::json to_json(const DimVector& v);
nlohmann::json to_json(const SubrepPoint& p);
nlohmann::json to_json(const CensusReport& report, bool with_entries = true);
nlohmann::json to_json(const TubeData& tube);
nlohmann::json to_json(const TransverseComparison& cmp);
nlohmann::json to_json(const CountingPolynomial& poly);

std::string render_table(const CensusReport& report);
std::string render_table(const TubeData& tube);
std::string render_table(const TransverseComparison& cmp);
std::string render_table(const CountingPolynomial& poly);

}  // namespace qgr
