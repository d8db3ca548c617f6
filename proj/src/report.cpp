#include "superstring/report.hpp"

#include <chrono>
#include <ctime>

namespace superstring {

Json to_json(const BoundReport& r) {
  return Json{{"check", r.check},
              {"inputs", r.inputs},
              {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"strict", r.strict},
              {"holds", r.holds},
              {"applicable", r.applicable}};
}

Json to_json(const CheckTally& t) {
  return Json{{"run", t.run}, {"held", t.held}, {"failed", t.failed}, {"skipped", t.skipped}};
}

Json to_json(const CampaignResult& c, bool include_reports) {
  Json checks = Json::object();
  for (const auto& [id, t] : c.tallies) checks[id] = to_json(t);
  Json violations = Json::array();
  for (const auto& r : c.violations) violations.push_back(to_json(r));
  Json j{{"suite", c.suite},   {"seed", c.seed},     {"trials", c.trials},
         {"run", c.run},       {"held", c.held},     {"failed", c.failed},
         {"skipped", c.skipped}, {"checks", checks}, {"violations", violations}};
  if (include_reports) {
    Json reports = Json::array();
    for (const auto& r : c.reports) reports.push_back(to_json(r));
    j["reports"] = std::move(reports);
  }
  return j;
}

Json to_json(const Solution& s, std::optional<double> ms) {
  Json j{{"algo", s.algorithm},
         {"length", s.length},
         {"overlap", s.total_overlap},
         {"order", s.order},
         {"superstring", s.text}};
  if (ms) j["ms"] = *ms;
  return j;
}

Json to_json(const WeightMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json instance_summary(const Instance& inst) {
  return Json{{"n", inst.size()}, {"total_length", inst.total_length()}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace superstring
