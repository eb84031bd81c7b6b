#include "efv/chow.hpp"
#include "scenario_internal.hpp"

namespace efv::scen {

using namespace detail;

namespace {

const char* const kSextics[] = {
    "s_0*s_1^3*s_2*s_3",   "s_0^2*s_1^2*s_2^2",   "s_0^2*s_1^2*s_2*s_3", "s_0^2*s_1^2*s_3^2", "s_0^3*s_1*s_2*s_3",
    "s_0*s_1^2*s_2^2*s_3", "s_0*s_1^2*s_2*s_3^2", "s_0^2*s_1*s_2^2*s_3", "s_0^2*s_1*s_2*s_3^2", "s_1^2*s_2^2*s_3^2",
    "s_0*s_1*s_2^3*s_3",   "s_0*s_1*s_2^2*s_3^2", "s_0*s_1*s_2*s_3^3",   "s_0^2*s_2^2*s_3^2"};

void body(Run& run) {
  const auto& cfg = run.config();
  auto s = poly::Ring::indexed("s", 4);
  auto w = poly::Ring::indexed("w", 14);
  std::vector<Polynomial> sextics;
  for (auto t : kSextics) sextics.push_back(poly::parse(t, s));

  auto sys = run.phase("system", [&] {
    std::vector<gb::Condition> conds;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) conds.push_back({Ideal::vars(s, {i, j}), 2});
    return gb::linear_system(s, conds, 6);
  });
  run.save("system", s, sys);
  run.check({"a.dim", "sextics double along the six tetrahedron edges: dimension", "14",
             [&] { return std::to_string(sys.size()); }});
  run.check({"a.span", "the system is spanned by the 14 monomial sextics", "true", [&] {
               auto all = sys;
               all.insert(all.end(), sextics.begin(), sextics.end());
               return bool_str(span_rank(sextics) == 14 && span_rank(all) == sys.size());
             }});

  RationalMap m(s, w, sextics);
  auto img = run.phase("image", [&] { return geom::image(m, image_options(cfg)); });
  const Ideal& W = img.ideal;
  run.save("image", w, W.basis().polys());
  run.check({"b.image", image_description(img), "(3, 24)", [&] { return dim_degree(W); }});

  std::vector<NamedPoint> pts;
  const int unprimed[] = {4, 0, 10, 12}, primed[] = {9, 13, 3, 1};
  for (int i = 0; i < 4; ++i) pts.push_back({"P" + std::to_string(i + 1), ProjectivePoint::coordinate(13, unprimed[i])});
  for (int i = 0; i < 4; ++i) pts.push_back({"P" + std::to_string(i + 1) + "'", ProjectivePoint::coordinate(13, primed[i])});

  run.phase("cones", [&] { cone_checks(run, "c.cone", "tangent cone multiplicity", pts, W, 4); });

  LineSpec spec;
  spec.prefix = "d.line";
  spec.ordered = true;
  spec.partners = 3;
  spec.expected = [](int i, int j) { return i < 4 && j >= 4 && j - 4 != i; };
  auto contained = run.phase("lines", [&] { return line_checks(run, spec, pts, W); });
  spot_check(run, m, pts, contained);

  run.check({"e.genus", "genus from the blow-up model agrees with the image degree", "13", [&] {
               auto model = chow::IntersectionModel::load(cfg.data_dir + "/models/genus13.txt");
               auto g_model = chow::genus((*model)["S"]);
               auto g_image = (gb::hilbert(W).degree + 2) / 2;
               if (g_model != g_image)
                 return "model " + std::to_string(g_model) + ", image " + std::to_string(g_image);
               return std::to_string(g_model);
             }});
}

}  // namespace

ScenarioReport run_fano13(const ScenarioConfig& cfg) {
  gf::ScopedPrime prime(cfg.prime);
  Run run("fano13", cfg);
  try {
    body(run);
  } catch (const std::exception& e) {
    run.error("engine", e);
  }
  return run.finish();
}

}  // namespace efv::scen
