#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "efv/field.hpp"
#include "efv/geom.hpp"

namespace efv::scen {

enum class Status { Pass, Fail, Skipped, Error };
std::string to_string(Status s);

struct ScenarioConfig {
  gf::u32 prime = gf::kDefaultPrime;
  std::uint64_t seed = 1;
  geom::ImageMode image_mode = geom::ImageMode::Elimination;
  int degreewise_max = 5;
  int retry_limit = 20;
  // Comma-separated globs on check ids; empty selects every check.
  std::string checks;
  // When set, the main ideals of each run are written there.
  std::string ideals_dir;
  std::string data_dir;

  // "elim" or "degreewise:D".
  std::string mode_label() const;
  // Accepts the same spellings; throws std::invalid_argument otherwise.
  void set_mode(const std::string& text);
  bool selects(const std::string& check_id) const;
};

struct CheckResult {
  std::string id, description, expected, actual;
  Status status = Status::Skipped;
};

struct ScenarioReport {
  std::string scenario;
  ScenarioConfig config;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, double>> timings_ms;
  // Rejected construction attempts and similar notes.
  std::vector<std::string> log;

  bool passed() const;
  bool has_error() const;
  const CheckResult* find(const std::string& id) const;
  std::size_t count(Status s) const;
};

ScenarioReport run_fano13(const ScenarioConfig& cfg);
ScenarioReport run_fano9(const ScenarioConfig& cfg);
ScenarioReport run_fano7(const ScenarioConfig& cfg);
ScenarioReport run_fano6(const ScenarioConfig& cfg);

const std::vector<std::string>& scenario_names();
// Throws std::invalid_argument for unknown names.
ScenarioReport run_scenario(const std::string& name, const ScenarioConfig& cfg);

// Keys in the order scenario, prime, seed, mode, checks, log, timings_ms.
std::string report_json(const ScenarioReport& r, bool with_timings = true);
// One report as an object, several as an array.
std::string reports_json(const std::vector<ScenarioReport>& rs, bool with_timings = true);

// 0 when every report passes, 2 when any check errored, 1 otherwise.
int exit_code(const std::vector<ScenarioReport>& rs);

}  // namespace efv::scen
