#include "doctest.h"
#include "efv/geom.hpp"
#include "efv/text.hpp"

using namespace efv;
using namespace efv::geom;
using gb::Ideal;
using poly::Ring;

namespace {

Polynomial P(const std::string& t, const RingPtr& r) { return poly::parse(t, r); }

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (auto& t : gens) g.push_back(P(t, r));
  return Ideal(r, std::move(g));
}

std::pair<int, std::int64_t> dim_deg(const Ideal& J) {
  auto h = gb::hilbert(J);
  return {h.projective_dim, h.degree};
}

const char* kSextics[] = {
    "s_0*s_1^3*s_2*s_3", "s_0^2*s_1^2*s_2^2", "s_0^2*s_1^2*s_2*s_3", "s_0^2*s_1^2*s_3^2",
    "s_0^3*s_1*s_2*s_3", "s_0*s_1^2*s_2^2*s_3", "s_0*s_1^2*s_2*s_3^2", "s_0^2*s_1*s_2^2*s_3",
    "s_0^2*s_1*s_2*s_3^2", "s_1^2*s_2^2*s_3^2", "s_0*s_1*s_2^3*s_3", "s_0*s_1*s_2^2*s_3^2",
    "s_0*s_1*s_2*s_3^3", "s_0^2*s_2^2*s_3^2"};

RationalMap sextic_map() {
  auto s = Ring::indexed("s", 4);
  std::vector<Polynomial> f;
  for (auto t : kSextics) f.push_back(P(t, s));
  return RationalMap(s, Ring::indexed("w", 14), std::move(f));
}

Ideal delta(const RingPtr& s) {
  return I(s, {"s_0 + s_1 + s_2 + s_3",
               "s_1^2*s_2 + s_1*s_2^2 + s_1^2*s_3 + s_1*s_2*s_3 + s_2^2*s_3 + s_1*s_3^2 + s_2*s_3^2"});
}

}  // namespace

TEST_CASE("projective points normalize and print signed") {
  auto p = ProjectivePoint::from_ints({0, 2, -4, 6});
  CHECK(p.str() == "[0:1:-2:3]");
  CHECK(p.pivot() == 1);
  CHECK(p == ProjectivePoint::from_ints({0, -1, 2, -3}));
  CHECK_THROWS(ProjectivePoint::from_ints({0, 0, 0}));
  auto s = Ring::indexed("s", 4);
  auto pt = point_of(p.ideal(s));
  REQUIRE(pt.has_value());
  CHECK(*pt == p);
  CHECK_FALSE(point_of(I(s, {"s_0"})).has_value());
}

TEST_CASE("rational map validation") {
  auto s = Ring::indexed("s", 3);
  auto w = Ring::indexed("w", 2);
  CHECK_THROWS(RationalMap(s, w, {P("s_0", s)}));
  CHECK_THROWS(RationalMap(s, w, {P("s_0", s), P("s_1^2", s)}));
  CHECK_THROWS(RationalMap(s, w, {P("0", s), P("0", s)}));
  RationalMap m(s, w, {P("s_0*s_1", s), P("s_0*s_2", s)});
  CHECK(m.base_locus() == I(s, {"s_0*s_1", "s_0*s_2"}));
  CHECK(m(ProjectivePoint::from_ints({1, 2, 3})) == ProjectivePoint::from_ints({2, 3}));
  CHECK_THROWS(m(ProjectivePoint::from_ints({0, 1, 1})));
}

TEST_CASE("Veronese conic in both image modes") {
  auto u = Ring::make({"u", "v"});
  auto w = Ring::indexed("w", 3);
  RationalMap m(u, w, {P("u^2", u), P("u*v", u), P("v^2", u)});
  auto e = image(m);
  CHECK(e.exact);
  CHECK(e.ideal == I(w, {"w_0*w_2 - w_1^2"}));
  ImageOptions o;
  o.mode = ImageMode::Degreewise;
  auto d = image(m, o);
  CHECK(d.stabilized);
  CHECK_FALSE(d.exact);
  CHECK(d.ideal == e.ideal);
  CHECK(d.image_hf[1] == 3);
  CHECK(d.image_hf[2] == 5);
  CHECK(d.label().rfind("degreewise:", 0) == 0);
  CHECK(e.label() == "elimination");
}

TEST_CASE("genus 13 sextic image") {
  auto m = sextic_map();
  auto e = image(m);
  CHECK(dim_deg(e.ideal) == std::pair<int, std::int64_t>{3, 24});
  ImageOptions o;
  o.mode = ImageMode::Degreewise;
  o.expected_dim = 3;
  o.expected_degree = 24;
  auto d = image(m, o);
  CHECK(d.stabilized);
  CHECK(d.ideal == e.ideal);
}

TEST_CASE("image of the cubic curve under the sextic map") {
  auto m = sextic_map();
  auto d = delta(m.source());
  auto h = gb::hilbert(d);
  CHECK(h.projective_dim == 1);
  CHECK(h.degree == 3);
  CHECK(h.curve_genus() == 1);
  auto nd = apply_to_subvariety(m, d);
  auto hn = gb::hilbert(nd.ideal);
  CHECK(hn.projective_dim == 1);
  CHECK(hn.degree == 6);
  CHECK(hn.curve_genus() == 1);
  ImageOptions o;
  o.mode = ImageMode::Degreewise;
  CHECK(apply_to_subvariety(m, d, o).ideal == nd.ideal);
  auto span = linear_span(nd.ideal);
  CHECK(span.gens().size() == 8);
  CHECK(dim_deg(span) == std::pair<int, std::int64_t>{5, 1});
}

TEST_CASE("image of a point and of a subvariety in the base locus") {
  auto m = sextic_map();
  auto s = m.source();
  auto p = ProjectivePoint::from_ints({1, 2, 3, 5});
  auto img = apply_to_subvariety(m, p.ideal(s));
  auto q = point_of(img.ideal);
  REQUIRE(q.has_value());
  CHECK(*q == m(p));
  // An edge of the tetrahedron lies in the base locus.
  CHECK_THROWS_AS(apply_to_subvariety(m, I(s, {"s_0", "s_1"})), std::domain_error);
}

TEST_CASE("contracted and exceptional images") {
  auto x = Ring::make({"x", "y", "z"});
  auto w = Ring::indexed("w", 3);
  RationalMap cremona(x, w, {P("y*z", x), P("x*z", x), P("x*y", x)});
  auto c = contracted_image(cremona, I(x, {"x"}));
  REQUIRE(c.has_value());
  CHECK(*c == ProjectivePoint::from_ints({1, 0, 0}));
  // The exceptional line over [1:0:0] maps onto a line, not a point.
  CHECK_FALSE(exceptional_image(cremona, ProjectivePoint::from_ints({1, 0, 0})).has_value());
  CHECK_FALSE(contracted_image(cremona, I(x, {"x - y"})).has_value());
  RationalMap m(x, w, {P("x^2", x), P("x*y", x), P("y*z", x)});
  auto e = exceptional_image(m, ProjectivePoint::from_ints({0, 0, 1}));
  REQUIRE(e.has_value());
  CHECK(*e == ProjectivePoint::from_ints({0, 0, 1}));
}

TEST_CASE("pullback") {
  auto m = sextic_map();
  CHECK(pullback(m, Ideal::unit(m.target())).is_unit());
  // The image ideal pulls back to zero.
  CHECK(pullback(m, image(m).ideal).is_zero());
  // A coordinate hyperplane pulls back to its sextic, which has no
  // component inside the base locus.
  auto h = pullback(m, I(m.target(), {"w_1"}));
  CHECK(h == I(m.source(), {"s_0^2*s_1^2*s_2^2"}));
}

TEST_CASE("compose") {
  auto m = sextic_map();
  std::vector<Polynomial> id;
  for (int i = 0; i < 14; ++i) id.push_back(Polynomial::var(m.target(), i));
  auto c = compose(m, RationalMap(m.target(), Ring::indexed("x", 14), id));
  CHECK(c.degree() == 6);
  for (int i = 0; i < 14; ++i) CHECK(c.forms()[static_cast<std::size_t>(i)] == m.forms()[static_cast<std::size_t>(i)]);
  // Common factors are divided out: (x^2, xy) then (a, b) gives (x, y).
  auto x = Ring::make({"x", "y"});
  auto ab = Ring::make({"a", "b"});
  RationalMap f(x, ab, {P("x^2", x), P("x*y", x)});
  RationalMap g(ab, Ring::make({"c", "d"}), {P("a", ab), P("b", ab)});
  auto fg = compose(f, g);
  CHECK(fg.degree() == 1);
  CHECK(fg.forms()[1] == P("y", x));
}

TEST_CASE("linear spans and lines") {
  auto s = Ring::indexed("s", 4);
  auto l = line_through(ProjectivePoint::coordinate(3, 0), ProjectivePoint::coordinate(3, 1), s);
  CHECK(l == I(s, {"s_2", "s_3"}));
  auto two = gb::intersect(ProjectivePoint::from_ints({1, 2, 0, 1}).ideal(s), ProjectivePoint::from_ints({0, 1, 1, 3}).ideal(s));
  CHECK(dim_deg(linear_span(two)) == std::pair<int, std::int64_t>{1, 1});
  auto conic = I(s, {"s_0 + s_1 - s_3", "s_0*s_1 - s_2^2"});
  auto span = linear_span(conic);
  CHECK(span.gens().size() == 1);
  CHECK(span == I(s, {"s_0 + s_1 - s_3"}));
  CHECK_THROWS(line_through(ProjectivePoint::coordinate(3, 0), ProjectivePoint::coordinate(3, 0), s));
}

TEST_CASE("lines through random point pairs") {
  auto s = Ring::indexed("s", 5);
  gf::Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    std::vector<gf::u32> a(5), b(5);
    for (auto& v : a) v = rng.element();
    for (auto& v : b) v = rng.element();
    ProjectivePoint p(a), q(b);
    if (p == q) continue;
    auto l = line_through(p, q, s);
    CHECK(dim_deg(l) == std::pair<int, std::int64_t>{1, 1});
    CHECK(lies_on(p.ideal(s), l));
    CHECK(lies_on(q.ideal(s), l));
  }
}

TEST_CASE("tangent cones of plane curves and surfaces") {
  auto x = Ring::make({"x", "y", "z"});
  auto nodal = I(x, {"y^2*z - x^2*z - x^3"});
  auto tc = tangent_cone(nodal, ProjectivePoint::from_ints({0, 0, 1}));
  CHECK(tc.multiplicity == 2);
  CHECK(tc.cone == I(tc.cone.ring(), {"y^2 - x^2"}));
  CHECK(tangent_cone(nodal, ProjectivePoint::from_ints({-1, 0, 1})).multiplicity == 1);
  CHECK_THROWS_AS(tangent_cone(nodal, ProjectivePoint::from_ints({1, 1, 1})), std::domain_error);
  auto s = Ring::indexed("s", 4);
  auto cone = I(s, {"s_1^2 + s_2^2 + s_3^2"});
  auto tv = tangent_cone(cone, ProjectivePoint::coordinate(3, 0));
  CHECK(tv.multiplicity == 2);
  CHECK(tv.projective_dim == 1);
}

TEST_CASE("initial forms give tangent planes") {
  auto s = Ring::indexed("s", 4);
  auto q = P("s_0*s_3 - s_1*s_2", s);
  auto p = ProjectivePoint::from_ints({1, 1, 1, 1});
  auto t = initial_form(q, p);
  CHECK(t.degree() == 1);
  // The tangent cone of a smooth quadric is its tangent plane.
  auto tc = tangent_cone(Ideal(s, {q}), p);
  CHECK(tc.multiplicity == 1);
  CHECK(tc.cone.contains(t));
}

TEST_CASE("singular loci of quadrics") {
  auto s = Ring::indexed("s", 4);
  auto cone = singular_locus(I(s, {"s_1^2 + s_2^2 + s_3^2"}));
  CHECK(gb::saturate_irrelevant(cone) == ProjectivePoint::coordinate(3, 0).ideal(s));
  auto smooth = singular_locus(I(s, {"s_0*s_3 - s_1*s_2"}));
  CHECK(gb::saturate_irrelevant(smooth).is_unit());
  auto twisted = I(s, {"s_0*s_2 - s_1^2", "s_0*s_3 - s_1*s_2", "s_1*s_3 - s_2^2"});
  CHECK(gb::saturate_irrelevant(singular_locus(twisted)).is_unit());
}

TEST_CASE("multiplicity one exactly at smooth sampled points") {
  // Cubic surface linear in s_3, singular along s_0 = s_1 = 0.
  auto s = Ring::indexed("s", 4);
  auto f = P("s_3*s_1^2 - s_0^3 - s_0^2*s_2", s);
  Ideal X(s, {f});
  auto sing = singular_locus(X);
  gf::Rng rng(5);
  int smooth = 0, singular = 0;
  for (int t = 0; t < 30; ++t) {
    std::vector<gf::u32> c(4);
    if (t % 3 == 0) {
      c = {0, 0, rng.element(), rng.element()};
      if (c[2] == 0 && c[3] == 0) continue;
    } else {
      c[0] = rng.element();
      c[1] = rng.nonzero();
      c[2] = rng.element();
      gf::u32 num = gf::add(gf::mul(c[0], gf::mul(c[0], c[0])), gf::mul(gf::mul(c[0], c[0]), c[2]));
      c[3] = gf::mul(num, gf::inv(gf::mul(c[1], c[1])));
    }
    ProjectivePoint p(c);
    bool is_sing = true;
    for (auto& g : sing.gens())
      if (poly::evaluate(g, p.coords()) != 0) is_sing = false;
    auto tc = tangent_cone(X, p);
    CHECK((tc.multiplicity == 1) == !is_sing);
    // Local dimension 2 at every point of the surface.
    CHECK(tc.projective_dim == 1);
    (is_sing ? singular : smooth)++;
  }
  CHECK(smooth > 0);
  CHECK(singular > 0);
}

TEST_CASE("projection from the span of the cubic curve in both modes") {
  auto m = sextic_map();
  auto nd = apply_to_subvariety(m, delta(m.source()));
  auto proj = linear_projection(linear_span(nd.ideal), "x");
  CHECK(proj.target()->nvars() == 8);
  auto sx = compose(m, proj);
  CHECK(sx.degree() == 6);
  auto e = image(sx);
  CHECK(dim_deg(e.ideal) == std::pair<int, std::int64_t>{3, 12});
  ImageOptions o;
  o.mode = ImageMode::Degreewise;
  auto d = image(sx, o);
  CHECK(d.stabilized);
  CHECK(d.ideal == e.ideal);
  // Projecting the genus 13 image gives the same threefold.
  CHECK(image(proj.restricted(image(m).ideal)).ideal == e.ideal);
}

TEST_CASE("general hyperplane pulls back to a sextic surface") {
  auto m = sextic_map();
  auto nd = apply_to_subvariety(m, delta(m.source()));
  auto sx = compose(m, linear_projection(linear_span(nd.ideal), "x"));
  gf::Rng rng(21);
  auto h = poly::random_form(sx.target(), 1, rng);
  auto X = pullback(sx, Ideal(sx.target(), {h}));
  CHECK(dim_deg(X) == std::pair<int, std::int64_t>{2, 6});
  CHECK(X.contains(delta(m.source())) == false);
  CHECK(delta(m.source()).contains(X));
}
