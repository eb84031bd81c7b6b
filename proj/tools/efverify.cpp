#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "efv/scenarios.hpp"

using namespace efv;

namespace {

void print(const scen::ScenarioReport& r, double seconds) {
  for (auto& c : r.checks) {
    if (c.status == scen::Status::Pass || c.status == scen::Status::Skipped) continue;
    std::cout << "  " << scen::to_string(c.status) << " " << c.id << ": " << c.description << " (expected " << c.expected
              << ", got " << c.actual << ")\n";
  }
  std::printf("%s: %s  pass %zu  fail %zu  error %zu  skipped %zu  %.2f s\n", r.scenario.c_str(),
              r.passed() ? "PASS" : "FAIL", r.count(scen::Status::Pass), r.count(scen::Status::Fail),
              r.count(scen::Status::Error), r.count(scen::Status::Skipped), seconds);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field verification of the Enriques-Fano threefold constructions"};
  std::string which;
  std::string mode = "elim";
  std::string report_path;
  scen::ScenarioConfig cfg;
  std::vector<std::string> choices = scen::scenario_names();
  choices.push_back("all");
  app.add_option("scenario", which, "fano13, fano9, fano7, fano6 or all")->required()->check(CLI::IsMember(choices));
  app.add_option("--prime", cfg.prime, "prime modulus below 2^24")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--mode", mode, "image mode: elim or degreewise:D")->capture_default_str();
  app.add_option("--retry-limit", cfg.retry_limit, "retries for degenerate random configurations")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--checks", cfg.checks, "comma-separated globs on check ids");
  app.add_option("--report", report_path, "write the JSON report here");
  app.add_option("--ideals-dir", cfg.ideals_dir, "write the main ideals of each run here");
  try {
    app.parse(argc, argv);
    cfg.set_mode(mode);
    gf::ScopedPrime probe(cfg.prime);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "efverify: " << e.what() << "\n";
    return 2;
  }

  std::vector<scen::ScenarioReport> reports;
  const std::vector<std::string> names = which == "all" ? scen::scenario_names() : std::vector<std::string>{which};
  try {
    for (auto& n : names) {
      auto t0 = std::chrono::steady_clock::now();
      reports.push_back(scen::run_scenario(n, cfg));
      print(reports.back(), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw std::runtime_error("cannot write " + report_path);
      out << scen::reports_json(reports) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "efverify: " << e.what() << "\n";
    return 2;
  }
  return scen::exit_code(reports);
}
