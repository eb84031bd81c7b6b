#include "efv/scenarios.hpp"
#include "json.hpp"

namespace efv::scen {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const ScenarioReport& r, bool with_timings) {
  Json j;
  j["scenario"] = r.scenario;
  j["prime"] = r.config.prime;
  j["seed"] = r.config.seed;
  j["mode"] = r.config.mode_label();
  Json checks = Json::array();
  for (auto& c : r.checks) {
    Json e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["status"] = to_string(c.status);
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["log"] = r.log;
  Json t = Json::object();
  if (with_timings)
    for (auto& [k, v] : r.timings_ms) t[k] = v;
  j["timings_ms"] = std::move(t);
  return j;
}

}  // namespace

std::string report_json(const ScenarioReport& r, bool with_timings) { return to_json(r, with_timings).dump(2); }

std::string reports_json(const std::vector<ScenarioReport>& rs, bool with_timings) {
  if (rs.size() == 1) return report_json(rs[0], with_timings);
  Json a = Json::array();
  for (auto& r : rs) a.push_back(to_json(r, with_timings));
  return a.dump(2);
}

}  // namespace efv::scen
