#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efv/scenarios.hpp"
#include "efv/text.hpp"

namespace efv::scen::detail {

using geom::ProjectivePoint;
using geom::RationalMap;
using gb::Ideal;
using poly::Polynomial;
using poly::RingPtr;

struct Task {
  std::string id, description, expected;
  std::function<std::string()> actual;
};

// Collects the checks and phase timings of one scenario run.
class Run {
 public:
  Run(std::string name, const ScenarioConfig& cfg);

  const ScenarioConfig& config() const { return cfg_; }
  gf::Rng& rng() { return rng_; }
  bool selected(const std::string& id) const;
  bool any_selected(const std::vector<std::string>& ids) const;

  template <class F>
  auto phase(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    struct Stop {
      Run* run;
      std::string name;
      std::chrono::steady_clock::time_point t0;
      ~Stop() { run->add_time(name, t0); }
    } stop{this, name, t0};
    return f();
  }

  // Evaluates the selected tasks, in parallel when several threads are
  // allowed, and records them in order. Returns the actual values; nothing
  // for skipped tasks and tasks that threw.
  std::vector<std::optional<std::string>> check(std::vector<Task> tasks);
  std::optional<std::string> check(Task t);
  void record(CheckResult c);
  // Engine failure outside any check.
  void error(const std::string& where, const std::exception& e);
  void note(std::string line) { report_.log.push_back(std::move(line)); }
  // Writes an ideal file when an ideals directory is configured.
  void save(const std::string& name, const RingPtr& ring, const std::vector<Polynomial>& gens);

  ScenarioReport finish() { return std::move(report_); }
  void add_time(const std::string& name, std::chrono::steady_clock::time_point t0);

 private:
  ScenarioConfig cfg_;
  gf::Rng rng_;
  ScenarioReport report_;
};

std::string bool_str(bool b);
std::string dim_degree(const Ideal& I);
std::string dim_degree(int dim, std::int64_t degree);
std::size_t span_rank(const std::vector<Polynomial>& forms);
bool in_span(const std::vector<Polynomial>& basis, const Polynomial& f);
Ideal edge(const RingPtr& s, const Polynomial& a, const Polynomial& b);

geom::ImageOptions image_options(const ScenarioConfig& cfg);
std::string image_description(const geom::ImageResult& r);

struct NamedPoint {
  std::string name;
  ProjectivePoint point;
};

// Tangent-cone multiplicity checks `<prefix>.<name>`.
void cone_checks(Run& run, const std::string& prefix, const std::string& what,
                 const std::vector<NamedPoint>& pts, const Ideal& W, std::int64_t expected);

// Distinct-points check `<id>`.
void distinct_check(Run& run, const std::string& id, const std::vector<NamedPoint>& pts);

struct LineSpec {
  std::string prefix;
  bool ordered = false;  // test both orientations of every line
  int partners = 0;      // expected number of associated points per point
  std::function<bool(int, int)> expected;
};

// Line containment checks `<prefix>.<P>-<Q>`, the partner counts
// `<prefix>.partners.<P>` and `<prefix>.graph`. Returns the contained
// lines found.
std::vector<std::pair<int, int>> line_checks(Run& run, const LineSpec& spec,
                                             const std::vector<NamedPoint>& pts, const Ideal& W);

// In degreewise mode: three random contained lines also lie on the
// elimination image.
void spot_check(Run& run, const RationalMap& m, const std::vector<NamedPoint>& pts,
                const std::vector<std::pair<int, int>>& contained);

// The line from P towards Q lies in the tangent cone at P.
bool cone_contains(const geom::TangentCone& tc, const ProjectivePoint& P, const ProjectivePoint& Q);

std::string join_points(const std::vector<NamedPoint>& pts);

}  // namespace efv::scen::detail
