#include <set>

#include "efv/linalg.hpp"
#include "scenario_internal.hpp"

namespace efv::scen {

using namespace detail;

namespace {

struct Configuration {
  std::vector<gf::u32> params;
  std::vector<ProjectivePoint> q;
  Ideal C[3];
  Polynomial g[3];  // quadrics through C1 C2, C1 C3, C2 C3
  Ideal r[3];
};

const char* const kQuadric[] = {"Q6", "Q7", "Q8"};

// Quadric index containing C_i and C_j.
int quadric_of(int i, int j) { return i + j - 1; }

std::string curve_name(int i) { return "C" + std::to_string(i + 1); }
std::string line_name(int i) { return "r" + std::to_string(i + 1); }

// Unit-speed basis of the kernel of the linear forms of a line.
std::vector<std::vector<gf::u32>> line_basis(const Ideal& line) {
  auto lin = gb::graded_piece(line, 1);
  gf::DenseMatrix M(lin.size(), 4);
  for (std::size_t r = 0; r < lin.size(); ++r)
    for (int c = 0; c < 4; ++c) {
      poly::Monomial x;
      x.set(c, 1);
      M.at(r, static_cast<std::size_t>(c)) = lin[r].coeff(x);
    }
  return gf::rref_copy(M).kernel;
}

// Z is a reduced length-2 scheme on the line.
bool reduced_pair_on_line(const Ideal& Z, const Ideal& line) {
  auto h = gb::hilbert(Z);
  if (h.projective_dim != 0 || h.degree != 2 || !Z.contains(line)) return false;
  auto basis = line_basis(line);
  if (basis.size() != 2) return false;
  auto uv = poly::Ring::make({"u", "v"});
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 4; ++i) {
    auto u = Polynomial::var(uv, 0).scaled(basis[0][i]);
    auto v = Polynomial::var(uv, 1).scaled(basis[1][i]);
    images.push_back(u + v);
  }
  for (auto& z : Z.basis().polys()) {
    auto b = poly::substitute(z, images);
    if (b.is_zero()) continue;
    if (b.degree() != 2) return false;
    poly::Monomial uu, uw, ww;
    uu.set(0, 2);
    uw.set(0, 1);
    uw.set(1, 1);
    ww.set(1, 2);
    const gf::u32 disc = gf::sub(gf::mul(b.coeff(uw), b.coeff(uw)), gf::mul(4, gf::mul(b.coeff(uu), b.coeff(ww))));
    return disc != 0;
  }
  return false;
}

// Tangent line of a smooth curve at a point, as a kernel basis.
std::vector<std::vector<gf::u32>> tangent_space(const Ideal& C, const ProjectivePoint& q) {
  const auto& gens = C.basis().polys();
  gf::DenseMatrix J(gens.size(), 4);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < 4; ++c)
      J.at(r, static_cast<std::size_t>(c)) = poly::evaluate(poly::derivative(gens[r], c), q.coords());
  return gf::rref_copy(J).kernel;
}

bool is_twisted_cubic(const Ideal& C) {
  auto h = gb::hilbert(C);
  return h.projective_dim == 1 && h.degree == 3 && h.curve_genus() == 0;
}

bool is_line(const Ideal& L) {
  auto h = gb::hilbert(L);
  return h.projective_dim == 1 && h.degree == 1;
}

// Residual of a complete intersection Q, S in C, with S a cubic through C
// whose derivative along a tangent direction of Q vanishes at every q.
std::optional<Ideal> link(const Polynomial& Q, const Ideal& C, const std::vector<ProjectivePoint>& q, gf::Rng& rng) {
  auto s = C.ring();
  auto cub = gb::graded_piece(C, 3);
  gf::DenseMatrix M(q.size(), cub.size());
  for (std::size_t h = 0; h < q.size(); ++h) {
    std::vector<gf::u32> grad(4), u(4);
    for (int i = 0; i < 4; ++i) grad[static_cast<std::size_t>(i)] = poly::evaluate(poly::derivative(Q, i), q[h].coords());
    for (auto& x : u) x = rng.element();
    std::size_t k = 0;
    while (k < 4 && grad[k] == 0) ++k;
    if (k == 4) return std::nullopt;
    gf::u32 acc = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != k) acc = gf::add(acc, gf::mul(grad[i], u[i]));
    u[k] = gf::neg(gf::mul(acc, gf::inv(grad[k])));
    for (std::size_t c = 0; c < cub.size(); ++c) {
      gf::u32 v = 0;
      for (int i = 0; i < 4; ++i)
        v = gf::add(v, gf::mul(u[static_cast<std::size_t>(i)], poly::evaluate(poly::derivative(cub[c], i), q[h].coords())));
      M.at(h, c) = v;
    }
  }
  auto kernel = gf::rref_copy(M).kernel;
  if (kernel.empty()) return std::nullopt;
  Polynomial S(s);
  for (auto& v : kernel) {
    const gf::u32 c = rng.element();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) S += cub[j].scaled(gf::mul(c, v[j]));
  }
  if (S.is_zero()) return std::nullopt;
  return gb::saturate_irrelevant(gb::quotient(Ideal(s, {Q, S}), C));
}

// Builds the configuration; returns the reason on a degenerate draw.
std::optional<Configuration> build(const poly::RingPtr& s, gf::Rng& rng, std::string& why) {
  Configuration c;
  auto P = [&](const char* t) { return poly::parse(t, s); };
  c.C[0] = Ideal(s, {P("s_0*s_2-s_1^2"), P("s_0*s_3-s_1*s_2"), P("s_1*s_3-s_2^2")});
  std::set<gf::u32> seen;
  while (c.q.size() < 5) {
    const gf::u32 t = rng.element();
    if (!seen.insert(t).second) continue;
    c.params.push_back(t);
    c.q.emplace_back(std::vector<gf::u32>{1, t, gf::mul(t, t), gf::mul(t, gf::mul(t, t))});
  }
  auto quad = gb::graded_piece(c.C[0], 2);
  c.g[0] = poly::random_combination(quad, rng);
  c.g[1] = poly::random_combination(quad, rng);
  for (int k = 0; k < 2; ++k) {
    auto C = link(c.g[k], c.C[0], c.q, rng);
    if (!C || !is_twisted_cubic(*C)) {
      why = "liaison on " + std::string(kQuadric[k]) + " did not give a twisted cubic";
      return std::nullopt;
    }
    c.C[k + 1] = *C;
  }
  auto q8 = gb::graded_piece(gb::intersect(c.C[1], c.C[2]), 2);
  if (q8.size() != 1) {
    why = "quadrics through C2 and C3: " + std::to_string(q8.size());
    return std::nullopt;
  }
  c.g[2] = q8[0];
  // r_k is residual to C_k in the two quadrics through it.
  const int qa[] = {0, 0, 1}, qb[] = {1, 2, 2};
  for (int k = 0; k < 3; ++k) {
    c.r[k] = gb::saturate_irrelevant(
        gb::quotient(Ideal(s, {c.g[qa[k]], c.g[qb[k]]}), c.C[k]));
    if (!is_line(c.r[k])) {
      why = line_name(k) + " is not a line";
      return std::nullopt;
    }
  }
  return c;
}

// Postconditions of an accepted configuration.
std::vector<Task> construction_checks(const Configuration& c) {
  auto s = c.C[0].ring();
  std::vector<Task> t;
  t.push_back({"a.points", "C1, C2, C3 meet exactly in the five reduced points q1..q5", "true", [&c, s] {
                 std::vector<Ideal> pts;
                 for (auto& q : c.q) pts.push_back(q.ideal(s));
                 return bool_str(gb::saturate_irrelevant(c.C[0] + c.C[1] + c.C[2]) == gb::intersect_all(pts));
               }});
  const int qa[] = {0, 0, 1}, qb[] = {1, 2, 2};
  for (int k = 0; k < 3; ++k) {
    const std::string a = kQuadric[qa[k]], b = kQuadric[qb[k]];
    t.push_back({"b.residual." + a + b, a + " meets " + b + " in " + curve_name(k) + " and the line " + line_name(k),
                 "true", [&c, s, k, qa, qb] {
                   return bool_str(Ideal(s, {c.g[qa[k]], c.g[qb[k]]}) == gb::intersect(c.C[k], c.r[k]));
                 }});
  }
  t.push_back({"c.Q8-smooth", "the quadric Q8 is smooth", "true", [&c] {
                 std::vector<Polynomial> d;
                 for (int i = 0; i < 4; ++i) d.push_back(poly::derivative(c.g[2], i));
                 return bool_str(span_rank(d) == 4);
               }});
  // b_ij = r_i meet r_j lies on C_k.
  const int pi[] = {0, 0, 1}, pj[] = {1, 2, 2}, pk[] = {2, 1, 0};
  t.push_back({"c.b-distinct", "the three points b_ij where the lines r_i meet are distinct", "3", [&c, pi, pj] {
                 std::set<std::vector<gf::u32>> pts;
                 for (int k = 0; k < 3; ++k) {
                   auto b = geom::point_of(gb::saturate_irrelevant(c.r[pi[k]] + c.r[pj[k]]));
                   if (!b) return std::string("r") + std::to_string(pi[k] + 1) + " and r" + std::to_string(pj[k] + 1) + " do not meet in a point";
                   pts.insert(b->coords());
                 }
                 return std::to_string(pts.size());
               }});
  for (int k = 0; k < 3; ++k) {
    const int i = pi[k], j = pj[k], m = pk[k];
    const std::string id = "b" + std::to_string(i + 1) + std::to_string(j + 1);
    t.push_back({"c." + id, id + " = " + line_name(i) + " meet " + curve_name(m) + " = " + line_name(j) + " meet " + curve_name(m),
                 "true", [&c, i, j, m] {
                   auto b = gb::saturate_irrelevant(c.r[i] + c.r[j]);
                   return bool_str(gb::saturate_irrelevant(c.r[i] + c.C[m]) == b &&
                                   gb::saturate_irrelevant(c.r[j] + c.C[m]) == b);
                 }});
  }
  for (int k = 0; k < 3; ++k)
    t.push_back({"d.chord." + line_name(k), line_name(k) + " meets " + curve_name(k) + " in two distinct points", "true",
                 [&c, k] { return bool_str(reduced_pair_on_line(gb::saturate_irrelevant(c.r[k] + c.C[k]), c.r[k])); }});
  return t;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt) * 0xBF58476D1CE4E5B9ULL + 1;
}

void body(Run& run) {
  const auto& cfg = run.config();
  auto s = poly::Ring::indexed("s", 4);

  std::optional<Configuration> conf;
  std::vector<CheckResult> post;
  run.phase("construction", [&] {
    for (int attempt = 0; attempt <= cfg.retry_limit && !conf; ++attempt) {
      gf::Rng rng(attempt_seed(cfg.seed, attempt));
      std::string why;
      auto c = build(s, rng, why);
      if (c) {
        conf = std::move(c);
        post.clear();
        for (auto& t : construction_checks(*conf)) {
          std::string actual = t.actual();
          post.push_back({t.id, t.description, t.expected, actual, actual == t.expected ? Status::Pass : Status::Fail});
          if (actual != t.expected && why.empty()) why = t.id + ": " + t.description;
        }
        if (!why.empty()) conf.reset();
      }
      run.note("attempt " + std::to_string(attempt + 1) + (conf ? " accepted" : " rejected: " + why));
    }
  });
  run.check({"construction", "configuration built within " + std::to_string(cfg.retry_limit) + " retries", "accepted",
             [&] { return std::string(conf ? "accepted" : "retries exhausted"); }});
  if (!conf) return;
  const auto& c = *conf;
  for (auto& p : post) {
    if (!run.selected(p.id)) {
      p.actual.clear();
      p.status = Status::Skipped;
    }
    run.record(p);
  }
  for (int k = 0; k < 3; ++k) run.save(curve_name(k), s, c.C[k].basis().polys());
  for (int k = 0; k < 3; ++k) run.save(line_name(k), s, c.r[k].basis().polys());
  run.save("quadrics", s, {c.g[0], c.g[1], c.g[2]});

  const int pi[] = {0, 0, 1}, pj[] = {1, 2, 2};
  {
    std::vector<Task> tasks;
    for (int k = 0; k < 3; ++k) {
      const int i = pi[k], j = pj[k];
      const std::string pair = curve_name(i) + curve_name(j);
      tasks.push_back({"e.cubics." + pair, "cubics through " + curve_name(i) + " and " + curve_name(j) + ": dimension", "5",
                       [&c, i, j] { return std::to_string(gb::graded_piece(gb::intersect(c.C[i], c.C[j]), 3).size()); }});
    }
    for (int k = 0; k < 3; ++k) {
      const int i = pi[k], j = pj[k];
      const std::string name = kQuadric[quadric_of(i, j)];
      tasks.push_back({"f.quadric." + name,
                       "quadrics through " + curve_name(i) + ", " + curve_name(j) + ", " + line_name(i) + ", " + line_name(j),
                       "1 " + name, [&c, i, j, name] {
                         auto piece = gb::graded_piece(gb::intersect_all({c.C[i], c.C[j], c.r[i], c.r[j]}), 2);
                         std::string a = std::to_string(piece.size());
                         if (piece.size() == 1 && in_span(piece, c.g[quadric_of(i, j)])) a += " " + name;
                         return a;
                       }});
    }
    run.check(std::move(tasks));
  }

  auto sys = run.phase("system", [&] {
    return gb::linear_system(s, {{c.C[0], 2}, {c.C[1], 2}, {c.C[2], 2}}, 7);
  });
  run.save("system", s, sys);
  {
    std::vector<Task> tasks;
    tasks.push_back({"g.dim", "septics double along C1, C2, C3: dimension", "7", [&] { return std::to_string(sys.size()); }});
    for (int k = 0; k < 3; ++k)
      tasks.push_back({"g.contains." + line_name(k), "every member contains " + line_name(k), "true",
                       [&, k] { return bool_str(c.r[k].contains(Ideal(s, sys))); }});
    // g_a g_b f with f a cubic through the two curves of the third quadric.
    std::vector<Polynomial> products;
    for (int k = 0; k < 3; ++k) {
      const int i = pi[k], j = pj[k];
      const int own = quadric_of(i, j);
      Polynomial gg(s);
      bool first = true;
      for (int x = 0; x < 3; ++x)
        if (x != own) {
          gg = first ? c.g[x] : gg * c.g[x];
          first = false;
        }
      for (auto& f : gb::graded_piece(gb::intersect(c.C[i], c.C[j]), 3)) products.push_back(gg * f);
    }
    tasks.push_back({"g.shape", "products of two quadrics and a cubic through the complementary curves lie in the system",
                     "true", [&, products] {
                       bool ok = !products.empty();
                       for (auto& p : products) ok = ok && in_span(sys, p);
                       return bool_str(ok);
                     }});
    tasks.push_back({"g.shape-span", "rank of those products", "7", [products] { return std::to_string(span_rank(products)); }});
    run.check(std::move(tasks));
  }

  {
    std::vector<Task> tasks;
    for (std::size_t h = 0; h < c.q.size(); ++h) {
      tasks.push_back({"h.tangents.q" + std::to_string(h + 1), "tangent lines of C1, C2, C3 at q" + std::to_string(h + 1) +
                                                                   " are independent",
                       "true", [&c, h] {
                         std::vector<std::vector<gf::u32>> rows;
                         for (int k = 0; k < 3; ++k) {
                           auto t = tangent_space(c.C[k], c.q[h]);
                           if (t.size() != 2) return std::string("singular at q") + std::to_string(h + 1);
                           rows.insert(rows.end(), t.begin(), t.end());
                         }
                         gf::DenseMatrix M(rows.size(), 4);
                         for (std::size_t r = 0; r < rows.size(); ++r)
                           for (std::size_t j = 0; j < 4; ++j) M.at(r, j) = rows[r][j];
                         return bool_str(gf::rref_copy(M).rank == 4);
                       }});
    }
    run.check(std::move(tasks));
  }

  const Polynomial M = poly::random_combination(sys, run.rng());
  run.save("member", s, {M});
  run.phase("member", [&] {
    std::vector<Task> tasks;
    const Ideal IM(s, {M});
    for (std::size_t h = 0; h < c.q.size(); ++h) {
      tasks.push_back({"i.cone.q" + std::to_string(h + 1),
                       "member tangent cone at q" + std::to_string(h + 1) + ": degree, union of the three tangent planes",
                       "3 true", [&c, IM, h] {
                         auto tc = geom::tangent_cone(IM, c.q[h]);
                         auto planes = geom::initial_form(c.g[0], c.q[h]) * geom::initial_form(c.g[1], c.q[h]) *
                                       geom::initial_form(c.g[2], c.q[h]);
                         return std::to_string(tc.multiplicity) + " " + bool_str(tc.cone == Ideal(tc.cone.ring(), {planes}));
                       }});
    }
    run.check(std::move(tasks));
  });

  auto w = poly::Ring::indexed("w", 7);
  RationalMap m(s, w, sys);
  auto img = run.phase("image", [&] { return geom::image(m, image_options(cfg)); });
  const Ideal& W = img.ideal;
  run.save("image", w, W.basis().polys());
  run.check({"j.image", image_description(img), "(3, 10)", [&] { return dim_degree(W); }});

  std::vector<NamedPoint> pts;
  std::vector<std::string> missing;
  run.phase("points", [&] {
    for (std::size_t h = 0; h < c.q.size(); ++h) {
      auto p = geom::exceptional_image(m, c.q[h]);
      if (p)
        pts.push_back({"E" + std::to_string(h + 1), *p});
      else
        missing.push_back("E" + std::to_string(h + 1));
    }
    for (int k = 0; k < 3; ++k) {
      auto p = geom::contracted_image(m, Ideal(s, {c.g[k]}));
      if (p)
        pts.push_back({kQuadric[k], *p});
      else
        missing.push_back(kQuadric[k]);
    }
  });
  run.check({"k.points", "points over q1..q5 and the contracted quadrics", "8", [&] {
               std::string a = std::to_string(pts.size());
               for (auto& n : missing) a += " missing " + n;
               return a;
             }});
  run.note("points: " + join_points(pts));
  if (pts.size() != 8) return;
  distinct_check(run, "k.distinct", pts);
  run.phase("cones", [&] { cone_checks(run, "k.cone", "tangent cone multiplicity", pts, W, 4); });

  LineSpec spec;
  spec.prefix = "l.line";
  spec.partners = 7;
  spec.expected = [](int, int) { return true; };
  auto contained = run.phase("lines", [&] { return line_checks(run, spec, pts, W); });
  spot_check(run, m, pts, contained);
}

}  // namespace

ScenarioReport run_fano6(const ScenarioConfig& cfg) {
  gf::ScopedPrime prime(cfg.prime);
  Run run("fano6", cfg);
  try {
    body(run);
  } catch (const std::exception& e) {
    run.error("engine", e);
  }
  return run.finish();
}

}  // namespace efv::scen
