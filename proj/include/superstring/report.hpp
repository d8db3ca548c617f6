#pragma once

// JSON encoding of solutions, bound reports and campaign results. Rationals
// are written as "p/q" strings.

#include <optional>
#include <string>

#include <json.hpp>

#include "superstring/bounds.hpp"
#include "superstring/campaign.hpp"
#include "superstring/pipeline.hpp"

namespace superstring {

using Json = nlohmann::ordered_json;

Json to_json(const BoundReport& r);
Json to_json(const CheckTally& t);
/// Tallies and violations; every kept report only when `include_reports`.
Json to_json(const CampaignResult& c, bool include_reports);
Json to_json(const Solution& s, std::optional<double> ms = std::nullopt);
Json to_json(const WeightMatrix& m);

Json instance_summary(const Instance& inst);

/// UTC, second resolution, e.g. "2024-01-31T12:00:00Z".
std::string utc_timestamp();

}  // namespace superstring
