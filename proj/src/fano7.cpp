#include "scenario_internal.hpp"

namespace efv::scen {

using namespace detail;

namespace {

const char* const kSextics[] = {
    "s_0*s_1^3*s_2*s_3",   "s_0^2*s_1^2*s_2^2",   "s_0^2*s_1^2*s_2*s_3", "s_0^2*s_1^2*s_3^2", "s_0^3*s_1*s_2*s_3",
    "s_0*s_1^2*s_2^2*s_3", "s_0*s_1^2*s_2*s_3^2", "s_0^2*s_1*s_2^2*s_3", "s_0^2*s_1*s_2*s_3^2", "s_1^2*s_2^2*s_3^2",
    "s_0*s_1*s_2^3*s_3",   "s_0*s_1*s_2^2*s_3^2", "s_0*s_1*s_2*s_3^3",   "s_0^2*s_2^2*s_3^2"};

struct Named {
  std::string name;
  std::vector<std::int64_t> coords;
};

// Expected images of the coordinate points of the sextic image.
const Named kPoints[] = {
    {"P1", {0, 0, 0, 0, 1, -1, 1, 1}},  {"P2", {0, 0, 0, 0, 0, 0, 0, 1}},  {"P3", {1, 0, 0, -2, 0, 0, 4, 2}},
    {"P4", {1, 0, -2, 0, 4, 0, 0, 2}},  {"P1'", {1, 0, 0, 0, 0, 0, 0, 0}}, {"P2'", {1, 2, 0, -2, 2, -2, 4, 4}},
    {"P3'", {0, 0, 0, 0, 1, 0, 0, 0}}, {"P4'", {0, 0, 0, 0, 0, 0, 1, 0}}};
const int kSources[] = {4, 0, 10, 12, 9, 13, 3, 1};

// Points where the plane meets the edges.
const Named kEdgePoints[] = {{"p01", {0, 0, -1, 1}}, {"p02", {0, -1, 0, 1}}, {"p03", {0, -1, 1, 0}},
                             {"p12", {-1, 0, 0, 1}}, {"p13", {-1, 0, 1, 0}}, {"p23", {-1, 1, 0, 0}}};

void body(Run& run) {
  const auto& cfg = run.config();
  auto s = poly::Ring::indexed("s", 4);
  auto w = poly::Ring::indexed("w", 14);
  std::vector<Polynomial> sextics;
  for (auto t : kSextics) sextics.push_back(poly::parse(t, s));
  RationalMap sigma(s, w, sextics);

  const Ideal delta(s, {poly::parse("s_0+s_1+s_2+s_3", s),
                        poly::parse("s_1^2*s_2+s_1*s_2^2+s_1^2*s_3+s_1*s_2*s_3+s_2^2*s_3+s_1*s_3^2+s_2*s_3^2", s)});
  std::vector<std::pair<std::string, Ideal>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      edges.emplace_back("l" + std::to_string(i) + std::to_string(j), Ideal::vars(s, {i, j}));

  {
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& p = kEdgePoints[k];
      tasks.push_back({"a.meet." + edges[k].first, "cubic meets " + edges[k].first + " only at " + p.name,
                       "true", [&, k] {
                         auto q = ProjectivePoint::from_ints(kEdgePoints[k].coords).ideal(s);
                         return bool_str(gb::saturate_irrelevant(delta + edges[k].second) == q);
                       }});
    }
    run.check(std::move(tasks));
  }

  auto sys = run.phase("system", [&] {
    std::vector<gb::Condition> conds;
    for (auto& [n, e] : edges) conds.push_back({e, 2});
    conds.push_back({delta, 1});
    return gb::linear_system(s, conds, 6);
  });
  run.save("system", s, sys);
  run.check({"b.dim", "sextics double along the edges containing the cubic: dimension", "8",
             [&] { return std::to_string(sys.size()); }});

  auto opt = image_options(cfg);
  auto nd = run.phase("curve", [&] {
    auto o = opt;
    o.max_degree = std::min(o.max_degree, 4);
    return geom::apply_to_subvariety(sigma, delta, o);
  });
  run.check({"c.curve", "image of the cubic: (dim, degree, genus) [" + nd.label() + "]", "(1, 6, 1)", [&] {
               auto h = gb::hilbert(nd.ideal);
               return "(" + std::to_string(h.projective_dim) + ", " + std::to_string(h.degree) + ", " +
                      std::to_string(h.curve_genus()) + ")";
             }});
  const Ideal span = geom::linear_span(nd.ideal);
  run.check({"c.span", "linear span of the image curve", "(5, 1)", [&] { return dim_degree(span); }});

  auto proj = geom::linear_projection(span, "x");
  auto m = geom::compose(sigma, proj);
  run.save("map", s, m.forms());
  auto img = run.phase("image", [&] { return geom::image(m, opt); });
  const Ideal& W = img.ideal;
  run.save("image", m.target(), W.basis().polys());
  run.check({"d.image", image_description(img), "(3, 12)", [&] { return dim_degree(W); }});

  std::vector<NamedPoint> pts;
  {
    std::vector<Task> tasks;
    for (int k = 0; k < 8; ++k) {
      const auto& e = kPoints[k];
      auto got = proj(ProjectivePoint::coordinate(13, kSources[k]));
      pts.push_back({e.name, got});
      auto want = ProjectivePoint::from_ints(e.coords);
      tasks.push_back({"e.point." + e.name, "projected coordinate point " + e.name, want.str(),
                       [got] { return got.str(); }});
    }
    run.check(std::move(tasks));
  }

  LineSpec spec;
  spec.prefix = "f.line";
  spec.partners = 6;
  spec.expected = [](int i, int j) { return !(i < 4 && j == i + 4); };
  auto contained = run.phase("lines", [&] { return line_checks(run, spec, pts, W); });
  spot_check(run, m, pts, contained);

  run.phase("base_locus", [&] {
    run.check({"g.base", "base locus is the cubic and the six edges", "true", [&] {
                 std::vector<Ideal> comps{delta};
                 for (auto& [n, e] : edges) comps.push_back(e);
                 auto d = gb::verify_decomposition(m.base_locus(), comps);
                 return bool_str(d.all_contained && d.residual_projective_dim < 0);
               }});
  });

  // Member 2 y_0 + y_4 + y_6 - y_7 of the composed system.
  const auto& c = m.forms();
  const Polynomial X = c[0].scaled(2) + c[4] + c[6] - c[7];
  const Ideal IX(s, {X});
  run.save("member", s, {X});
  run.phase("member", [&] {
    std::vector<Task> tasks;
    for (int i = 0; i < 4; ++i) {
      auto P = ProjectivePoint::coordinate(3, i);
      tasks.push_back({"h.cone.v" + std::to_string(i), "member tangent cone at vertex " + P.str(), "3",
                       [&IX, P] { return std::to_string(geom::tangent_cone(IX, P).multiplicity); }});
    }
    for (auto& e : kEdgePoints) {
      auto P = ProjectivePoint::from_ints(e.coords);
      tasks.push_back({"h.cone." + e.name, "member tangent cone at " + e.name + " " + P.str(), "2",
                       [&IX, P] { return std::to_string(geom::tangent_cone(IX, P).multiplicity); }});
    }
    tasks.push_back({"h.singular", "member singular locus is the edges plus finitely many points", "true", [&] {
                       std::vector<Ideal> comps;
                       for (auto& [n, e] : edges) comps.push_back(e);
                       auto d = gb::verify_decomposition(geom::singular_locus(IX, 1), comps);
                       return bool_str(d.all_contained && d.residual_projective_dim <= 0);
                     }});
    run.check(std::move(tasks));

    std::vector<Task> edge_tasks;
    const auto end = ProjectivePoint::coordinate(3, 3);
    for (int k = 0; k < 3; ++k) {
      const gf::u32 a = run.rng().nonzero();
      const ProjectivePoint P(std::vector<gf::u32>{a, 0, 0, 1});
      edge_tasks.push_back({"i.edge-point." + std::to_string(k + 1),
                            "member tangent cone at " + P.str() + " on l12: degree, contains the edge", "2 true",
                            [&IX, P, end] {
                              auto tc = geom::tangent_cone(IX, P);
                              return std::to_string(tc.multiplicity) + " " + bool_str(cone_contains(tc, P, end));
                            }});
    }
    run.check(std::move(edge_tasks));
  });
}

}  // namespace

ScenarioReport run_fano7(const ScenarioConfig& cfg) {
  gf::ScopedPrime prime(cfg.prime);
  Run run("fano7", cfg);
  try {
    body(run);
  } catch (const std::exception& e) {
    run.error("engine", e);
  }
  return run.finish();
}

}  // namespace efv::scen
