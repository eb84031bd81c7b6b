#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

#include "efv/linalg.hpp"
#include "scenario_internal.hpp"

namespace efv::scen {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "error";
}

std::string ScenarioConfig::mode_label() const {
  if (image_mode == geom::ImageMode::Elimination) return "elim";
  return "degreewise:" + std::to_string(degreewise_max);
}

void ScenarioConfig::set_mode(const std::string& text) {
  if (text == "elim" || text == "elimination") {
    image_mode = geom::ImageMode::Elimination;
    return;
  }
  const std::string pre = "degreewise:";
  if (text.rfind(pre, 0) == 0) {
    const std::string d = text.substr(pre.size());
    if (!d.empty() && d.size() < 4 && std::all_of(d.begin(), d.end(), ::isdigit)) {
      int v = std::stoi(d);
      if (v >= 2) {
        image_mode = geom::ImageMode::Degreewise;
        degreewise_max = v;
        return;
      }
    }
  }
  throw std::invalid_argument("mode must be elim or degreewise:D with D >= 2, got '" + text + "'");
}

bool ScenarioConfig::selects(const std::string& id) const {
  if (checks.empty()) return true;
  std::stringstream ss(checks);
  std::string pat;
  while (std::getline(ss, pat, ','))
    if (!pat.empty() && fnmatch(pat.c_str(), id.c_str(), 0) == 0) return true;
  return false;
}

bool ScenarioReport::passed() const {
  for (auto& c : checks)
    if (c.status == Status::Fail || c.status == Status::Error) return false;
  return true;
}

bool ScenarioReport::has_error() const {
  for (auto& c : checks)
    if (c.status == Status::Error) return true;
  return false;
}

const CheckResult* ScenarioReport::find(const std::string& id) const {
  for (auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::size_t ScenarioReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](auto& c) { return c.status == s; }));
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"fano13", "fano9", "fano7", "fano6"};
  return names;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioConfig& cfg) {
  if (name == "fano13") return run_fano13(cfg);
  if (name == "fano9") return run_fano9(cfg);
  if (name == "fano7") return run_fano7(cfg);
  if (name == "fano6") return run_fano6(cfg);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

int exit_code(const std::vector<ScenarioReport>& rs) {
  bool fail = false;
  for (auto& r : rs) {
    if (r.has_error()) return 2;
    fail = fail || !r.passed();
  }
  return fail ? 1 : 0;
}

namespace detail {

Run::Run(std::string name, const ScenarioConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg_.data_dir.empty()) cfg_.data_dir = EFV_DATA_DIR;
  report_.scenario = std::move(name);
  report_.config = cfg_;
}

bool Run::selected(const std::string& id) const {
  return cfg_.selects(id) || cfg_.selects(report_.scenario + "." + id);
}

bool Run::any_selected(const std::vector<std::string>& ids) const {
  return std::any_of(ids.begin(), ids.end(), [&](auto& id) { return selected(id); });
}

void Run::add_time(const std::string& name, std::chrono::steady_clock::time_point t0) {
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (auto& [k, v] : report_.timings_ms)
    if (k == name) {
      v += ms;
      return;
    }
  report_.timings_ms.emplace_back(name, ms);
}

std::vector<std::optional<std::string>> Run::check(std::vector<Task> tasks) {
  const std::size_t n = tasks.size();
  std::vector<CheckResult> out(n);
  std::vector<std::optional<std::string>> values(n);
  std::vector<char> run(n);
  for (std::size_t i = 0; i < n; ++i) run[i] = selected(tasks[i].id);
  const int n_int = static_cast<int>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(gf::thread_cap()) if (n > 1)
  for (int k = 0; k < n_int; ++k) {
    const auto i = static_cast<std::size_t>(k);
    auto& t = tasks[i];
    auto& c = out[i];
    c.id = t.id;
    c.description = t.description;
    c.expected = t.expected;
    if (!run[i]) {
      c.status = Status::Skipped;
      continue;
    }
    try {
      c.actual = t.actual();
      c.status = c.actual == c.expected ? Status::Pass : Status::Fail;
      values[i] = c.actual;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
      c.status = Status::Error;
    }
  }
  for (auto& c : out) record(std::move(c));
  return values;
}

std::optional<std::string> Run::check(Task t) {
  std::vector<Task> one;
  one.push_back(std::move(t));
  return check(std::move(one))[0];
}

void Run::record(CheckResult c) { report_.checks.push_back(std::move(c)); }

void Run::error(const std::string& where, const std::exception& e) {
  CheckResult c;
  c.id = where;
  c.description = "engine failure during " + where;
  c.expected = "completed";
  c.actual = std::string("error: ") + e.what();
  c.status = Status::Error;
  record(std::move(c));
}

void Run::save(const std::string& name, const RingPtr& ring, const std::vector<Polynomial>& gens) {
  if (cfg_.ideals_dir.empty()) return;
  std::filesystem::create_directories(cfg_.ideals_dir);
  poly::write_ideal_file(cfg_.ideals_dir + "/" + report_.scenario + "_" + name + ".txt", ring, gens);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string dim_degree(int dim, std::int64_t degree) {
  return "(" + std::to_string(dim) + ", " + std::to_string(degree) + ")";
}

std::string dim_degree(const Ideal& I) {
  auto h = gb::hilbert(I);
  return dim_degree(h.projective_dim, h.degree);
}

std::size_t span_rank(const std::vector<Polynomial>& forms) {
  if (forms.empty()) return 0;
  const int n = forms[0].nvars();
  const int d = forms[0].degree();
  auto mons = poly::monomials_of_degree(n, d);
  gf::DenseMatrix M(forms.size(), mons.size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (!forms[r].is_zero() && (forms[r].degree() != d || !forms[r].is_homogeneous()))
      throw std::invalid_argument("span_rank: forms of mixed degrees");
    for (std::size_t c = 0; c < mons.size(); ++c) M.at(r, c) = forms[r].coeff(mons[c]);
  }
  return gf::rref_copy(M).rank;
}

bool in_span(const std::vector<Polynomial>& basis, const Polynomial& f) {
  auto all = basis;
  all.push_back(f);
  return span_rank(all) == span_rank(basis);
}

Ideal edge(const RingPtr& s, const Polynomial& a, const Polynomial& b) { return Ideal(s, {a, b}); }

geom::ImageOptions image_options(const ScenarioConfig& cfg) {
  geom::ImageOptions o;
  o.mode = cfg.image_mode;
  o.max_degree = cfg.degreewise_max;
  return o;
}

std::string image_description(const geom::ImageResult& r) {
  return "image of the map, projective (dim, degree) [" + r.label() + "]";
}

void cone_checks(Run& run, const std::string& prefix, const std::string& what,
                 const std::vector<NamedPoint>& pts, const Ideal& W, std::int64_t expected) {
  std::vector<Task> tasks;
  for (auto& p : pts) {
    tasks.push_back({prefix + "." + p.name, what + " at " + p.name + " " + p.point.str(), std::to_string(expected),
                     [&W, pt = p.point] { return std::to_string(geom::tangent_cone(W, pt).multiplicity); }});
  }
  run.check(std::move(tasks));
}

void distinct_check(Run& run, const std::string& id, const std::vector<NamedPoint>& pts) {
  run.check({id, "the " + std::to_string(pts.size()) + " points are pairwise distinct", std::to_string(pts.size()),
             [&pts] {
               std::set<std::vector<gf::u32>> s;
               for (auto& p : pts) s.insert(p.point.coords());
               return std::to_string(s.size());
             }});
}

std::vector<std::pair<int, int>> line_checks(Run& run, const LineSpec& spec, const std::vector<NamedPoint>& pts,
                                             const Ideal& W) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = spec.ordered ? 0 : i + 1; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  const RingPtr& ring = W.ring();
  std::vector<Task> tasks;
  for (auto [i, j] : pairs) {
    const auto& a = pts[static_cast<std::size_t>(i)];
    const auto& b = pts[static_cast<std::size_t>(j)];
    tasks.push_back({spec.prefix + "." + a.name + "-" + b.name, "line " + a.name + b.name + " contained in the image",
                     bool_str(spec.expected(std::min(i, j), std::max(i, j))), [&W, &ring, pa = a.point, pb = b.point] {
                       return bool_str(geom::lies_on(geom::line_through(pa, pb, ring), W));
                     }});
  }
  auto values = run.check(std::move(tasks));
  bool complete = true;
  std::set<std::pair<int, int>> found;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!values[k]) {
      complete = false;
      continue;
    }
    auto [i, j] = pairs[k];
    if (*values[k] == "true") found.emplace(std::min(i, j), std::max(i, j));
  }
  std::vector<std::pair<int, int>> contained(found.begin(), found.end());

  std::size_t expected_lines = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) expected_lines += spec.expected(i, j);
  std::vector<Task> summary;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (auto [a, b] : contained) c += (a == i || b == i);
    summary.push_back({spec.prefix + ".partners." + pts[static_cast<std::size_t>(i)].name,
                       "number of points associated with " + pts[static_cast<std::size_t>(i)].name,
                       std::to_string(spec.partners), [c] { return std::to_string(c); }});
  }
  summary.push_back({spec.prefix + ".graph", "distinct contained lines among all point pairs",
                     std::to_string(expected_lines), [&] { return std::to_string(contained.size()); }});
  if (complete) {
    run.check(std::move(summary));
  } else {
    for (auto& t : summary) run.record({t.id, t.description, t.expected, "incomplete line checks", Status::Skipped});
  }
  return contained;
}

void spot_check(Run& run, const RationalMap& m, const std::vector<NamedPoint>& pts,
                const std::vector<std::pair<int, int>>& contained) {
  if (run.config().image_mode != geom::ImageMode::Degreewise) return;
  const std::string id = "spot.elimination";
  if (!run.selected(id)) {
    run.record({id, "contained lines also lie on the elimination image", "3", "", Status::Skipped});
    return;
  }
  std::vector<std::pair<int, int>> pick = contained;
  std::vector<std::pair<int, int>> chosen;
  while (chosen.size() < 3 && !pick.empty()) {
    auto k = static_cast<std::size_t>(run.rng().below(pick.size()));
    chosen.push_back(pick[k]);
    pick.erase(pick.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::string names;
  for (auto [i, j] : chosen) names += " " + pts[static_cast<std::size_t>(i)].name + pts[static_cast<std::size_t>(j)].name;
  run.check({id, "contained lines also lie on the elimination image:" + names, "3", [&] {
               auto E = run.phase("spot_elimination", [&] { return geom::image(m).ideal; });
               int ok = 0;
               for (auto [i, j] : chosen)
                 ok += geom::lies_on(geom::line_through(pts[static_cast<std::size_t>(i)].point,
                                                        pts[static_cast<std::size_t>(j)].point, E.ring()),
                                     E);
               return std::to_string(ok);
             }});
}

bool cone_contains(const geom::TangentCone& tc, const ProjectivePoint& P, const ProjectivePoint& Q) {
  const auto& p = P.coords();
  const auto& q = Q.coords();
  const auto k = static_cast<std::size_t>(P.pivot());
  // Direction Q - (q_k / p_k) P, pivot coordinate dropped.
  const gf::u32 t = gf::mul(q[k], gf::inv(p[k]));
  std::vector<gf::u32> d;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != k) d.push_back(gf::sub(q[j], gf::mul(t, p[j])));
  for (auto& g : tc.cone.gens())
    if (poly::evaluate(g, d) != 0) return false;
  return true;
}

std::string join_points(const std::vector<NamedPoint>& pts) {
  std::string s;
  for (auto& p : pts) s += (s.empty() ? "" : " ") + p.name + "=" + p.point.str();
  return s;
}

}  // namespace detail
}  // namespace efv::scen
