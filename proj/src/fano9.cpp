#include "scenario_internal.hpp"

namespace efv::scen {

using namespace detail;

namespace {

void body(Run& run) {
  const auto& cfg = run.config();
  auto s = poly::Ring::indexed("s", 4);
  auto w = poly::Ring::indexed("w", 10);
  auto P = [&](const char* t) { return poly::parse(t, s); };
  // Faces of the two trihedra.
  const std::vector<Polynomial> f{P("s_0-55*s_1+34*s_2"), P("s_0-21*s_1+13*s_2"), P("s_0")};
  const std::vector<Polynomial> g{P("s_3"), P("s_1+s_3"), P("s_2+s_3")};
  const auto v = ProjectivePoint::coordinate(3, 3), vp = ProjectivePoint::coordinate(3, 0);

  struct Line {
    std::string name;
    Ideal ideal;
  };
  // Edge l_k is cut by the two faces other than f_k.
  std::vector<Line> edges;
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    edges.push_back({"l" + std::to_string(k + 1), edge(s, f[static_cast<std::size_t>(std::min(a, b))], f[static_cast<std::size_t>(std::max(a, b))])});
  }
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    edges.push_back({"l" + std::to_string(k + 1) + "'", edge(s, g[static_cast<std::size_t>(std::min(a, b))], g[static_cast<std::size_t>(std::max(a, b))])});
  }
  std::vector<Line> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.push_back({"r" + std::to_string(i + 1) + std::to_string(j + 1), edge(s, f[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)])});

  auto sys = run.phase("system", [&] {
    std::vector<gb::Condition> conds;
    for (auto& e : edges) conds.push_back({e.ideal, 2});
    conds.push_back({v.ideal(s), 3});
    conds.push_back({vp.ideal(s), 3});
    return gb::linear_system(s, conds, 7);
  });
  run.save("system", s, sys);
  run.check({"a.dim", "septics double along the six edges, triple at both vertices: dimension", "10",
             [&] { return std::to_string(sys.size()); }});

  // Forms of the stated shape.
  const Polynomial F = f[0] * f[1] * f[2], G = g[0] * g[1] * g[2];
  std::vector<std::pair<std::string, Polynomial>> shape;
  for (int i = 0; i < 4; ++i)
    shape.push_back({"f1f2f3f1'f2'f3's" + std::to_string(i), F * G * Polynomial::var(s, i)});
  const char* sq[] = {"f3^2f2^2", "f1^2f3^2", "f1^2f2^2"};
  const int pa[] = {2, 0, 0}, pb[] = {1, 2, 1};
  for (int k = 0; k < 3; ++k) {
    const auto a = static_cast<std::size_t>(pa[k]), b = static_cast<std::size_t>(pb[k]);
    shape.push_back({std::string("f1'f2'f3'") + sq[k], G * f[a].pow(2) * f[b].pow(2)});
    std::string primed = sq[k];
    primed.insert(2, "'");
    primed.insert(primed.size() - 2, "'");
    shape.push_back({"f1f2f3" + primed, F * g[a].pow(2) * g[b].pow(2)});
  }
  {
    std::vector<Task> tasks;
    for (auto& [name, form] : shape)
      tasks.push_back({"b.shape." + name, "form " + name + " lies in the system", "true",
                       [&sys, &form] { return bool_str(in_span(sys, form)); }});
    tasks.push_back({"b.span", "the shaped forms span the system", "10", [&] {
                       std::vector<Polynomial> all;
                       for (auto& [n, form] : shape) all.push_back(form);
                       return std::to_string(span_rank(all));
                     }});
    run.check(std::move(tasks));
  }

  {
    std::vector<Task> tasks;
    for (auto& l : r)
      tasks.push_back({"c.base." + l.name, "line " + l.name + " lies in the base locus", "true",
                       [&sys, &l] { return bool_str(l.ideal.contains(Ideal(l.ideal.ring(), sys))); }});
    run.check(std::move(tasks));
  }

  const Polynomial K = poly::random_combination(sys, run.rng());
  {
    std::vector<Task> tasks;
    for (auto& e : edges)
      tasks.push_back({"d.double." + e.name, "random member is double along " + e.name, "true",
                       [&K, &e] { return bool_str(gb::vanishes_to_order(K, e.ideal, 2)); }});
    tasks.push_back({"d.triple.v", "random member is triple at v " + v.str(), "true",
                     [&] { return bool_str(gb::vanishes_to_order(K, v.ideal(s), 3)); }});
    tasks.push_back({"d.triple.v'", "random member is triple at v' " + vp.str(), "true",
                     [&] { return bool_str(gb::vanishes_to_order(K, vp.ideal(s), 3)); }});
    run.check(std::move(tasks));
  }

  RationalMap m(s, w, sys);
  auto img = run.phase("image", [&] { return geom::image(m, image_options(cfg)); });
  const Ideal& W = img.ideal;
  run.save("image", w, W.basis().polys());
  run.check({"e.image", image_description(img), "(3, 16)", [&] { return dim_degree(W); }});

  // P1 and P1' come from the vertices, the others from the faces.
  std::vector<NamedPoint> pts;
  std::vector<std::string> missing;
  run.phase("points", [&] {
    auto add = [&](const std::string& name, std::optional<ProjectivePoint> p) {
      if (p)
        pts.push_back({name, *p});
      else
        missing.push_back(name);
    };
    add("P1", geom::exceptional_image(m, vp));
    for (int i = 0; i < 3; ++i) add("P" + std::to_string(i + 2), geom::contracted_image(m, Ideal(s, {f[static_cast<std::size_t>(i)]})));
    add("P1'", geom::exceptional_image(m, v));
    for (int i = 0; i < 3; ++i) add("P" + std::to_string(i + 2) + "'", geom::contracted_image(m, Ideal(s, {g[static_cast<std::size_t>(i)]})));
  });
  run.check({"f.points", "vertices and faces are contracted to points", "8", [&] {
               std::string a = std::to_string(pts.size());
               for (auto& n : missing) a += " missing " + n;
               return a;
             }});
  run.note("points: " + join_points(pts));
  if (pts.size() != 8) return;
  distinct_check(run, "f.distinct", pts);
  run.phase("cones", [&] { cone_checks(run, "f.cone", "tangent cone multiplicity", pts, W, 4); });

  LineSpec spec;
  spec.prefix = "g.line";
  spec.partners = 4;
  spec.expected = [](int i, int j) { return i < 4 && j >= 4; };
  auto contained = run.phase("lines", [&] { return line_checks(run, spec, pts, W); });
  spot_check(run, m, pts, contained);

  std::optional<std::vector<Polynomial>> sextics;
  auto sextic_system = [&]() -> const std::vector<Polynomial>& {
    if (!sextics) {
      std::vector<gb::Condition> conds;
      for (auto& e : edges) conds.push_back({e.ideal, 2});
      sextics = gb::linear_system(s, conds, 6);
    }
    return *sextics;
  };
  run.phase("uniqueness", [&] {
    run.check({"h.dim", "sextics double along the six edges: dimension", "1",
               [&] { return std::to_string(sextic_system().size()); }});
    run.check({"h.product", "the product of the six faces is such a sextic", "true",
               [&] { return bool_str(in_span(sextic_system(), F * G)); }});
  });
}

}  // namespace

ScenarioReport run_fano9(const ScenarioConfig& cfg) {
  gf::ScopedPrime prime(cfg.prime);
  Run run("fano9", cfg);
  try {
    body(run);
  } catch (const std::exception& e) {
    run.error("engine", e);
  }
  return run.finish();
}

}  // namespace efv::scen
