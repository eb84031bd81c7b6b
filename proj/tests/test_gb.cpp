#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "efv/hilbert.hpp"
#include "efv/linsys.hpp"
#include "efv/text.hpp"
#include "support.hpp"

using namespace efv;
using namespace efv::gb;
using poly::parse;
using poly::Ring;

namespace {

RingPtr S() { return Ring::indexed("s", 4); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto t : gens) g.push_back(parse(t, r));
  return Ideal(r, g);
}

std::vector<Polynomial> random_system(const RingPtr& r, gf::Rng& rng, int count, bool homogeneous) {
  std::vector<Polynomial> g;
  for (int k = 0; k < count; ++k) {
    int d = 1 + static_cast<int>(rng.below(3));
    Polynomial f = poly::random_form(r, d, rng);
    // Sparse: keep a few terms only.
    std::vector<Term> t;
    for (auto& x : f.terms())
      if (rng.below(3) == 0 || t.empty()) t.push_back(x);
    f = Polynomial::from_terms(r, t);
    if (!homogeneous) f += poly::random_form(r, d - 1, rng);
    g.push_back(f);
  }
  return g;
}

}  // namespace

TEST_CASE("basis of a principal linear ideal") {
  auto r = S();
  auto g = I(r, {"s_0"}).basis();
  REQUIRE(g.size() == 1);
  CHECK(g.polys()[0] == parse("s_0", r));
  CHECK(I(r, {"s_0"}).normal_form(parse("s_0", r)).is_zero());
}

TEST_CASE("twisted cubic minors are a grevlex basis") {
  auto r = S();
  auto J = I(r, {"s_1^2 - s_0*s_2", "s_1*s_2 - s_0*s_3", "s_2^2 - s_1*s_3"});
  const auto& g = J.basis();
  CHECK(g.size() == 3);
  CHECK(s_pairs_reduce_to_zero(g));
  for (auto& f : J.gens()) CHECK(std::count(g.polys().begin(), g.polys().end(), f.monic()) == 1);
  auto h = hilbert(J);
  CHECK(h.projective_dim == 1);
  CHECK(h.degree == 3);
  CHECK(h.curve_genus() == 0);
}

TEST_CASE("Buchberger and F4 agree") {
  gf::Rng rng(2025);
  auto r = S();
  auto r3 = Ring::indexed("x", 3);
  for (int t = 0; t < 25; ++t) {
    bool hom = t % 2 == 0;
    auto g = random_system(r, rng, 3 + static_cast<int>(rng.below(2)), hom);
    // Lex bases of random systems grow quickly; keep them small and graded.
    auto g3 = random_system(r3, rng, 3, true);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2),
                     MonomialOrder::weighted({2, 1, 1, 1})}) {
      if (ord == MonomialOrder::lex()) g.swap(g3);
      CAPTURE(t);
      CAPTURE(ord.name());
      GbOptions a, b;
      a.algorithm = Algorithm::Buchberger;
      b.algorithm = Algorithm::F4;
      auto ga = groebner(g, ord, a);
      auto gb2 = groebner(g, ord, b);
      REQUIRE(ga.size() == gb2.size());
      for (std::size_t k = 0; k < ga.size(); ++k) CHECK(ga.polys()[k] == gb2.polys()[k]);
      CHECK(s_pairs_reduce_to_zero(ga));
      for (auto& f : g) CHECK(ga.contains(f));
      if (ord == MonomialOrder::lex()) g.swap(g3);
    }
  }
}

TEST_CASE("basis does not depend on generator order") {
  gf::Rng rng(31);
  auto r = S();
  for (int t = 0; t < 10; ++t) {
    auto g = random_system(r, rng, 4, true);
    auto h = g;
    std::reverse(h.begin(), h.end());
    Ideal a(r, g), b(r, h);
    CHECK(a == b);
    for (auto& p : a.basis().polys()) CHECK(b.contains(p));
  }
}

TEST_CASE("resource limits are explicit errors") {
  auto r = S();
  GbOptions o;
  o.max_degree = 3;
  std::vector<Polynomial> g{parse("s_0^2*s_1 - s_2^3", r), parse("s_1^2*s_3 - s_0^3", r),
                            parse("s_0*s_2*s_3 - s_1^3", r)};
  CHECK_THROWS_AS(groebner(g, MonomialOrder::grevlex(), o), ResourceLimit);
  o.max_degree = 100;
  o.max_basis = 2;
  CHECK_THROWS_AS(groebner(g, MonomialOrder::grevlex(), o), ResourceLimit);
}

TEST_CASE("elimination of a parameter") {
  auto r = Ring::make({"t", "x", "y"});
  auto J = I(r, {"x - t^2", "y - t^3"});
  auto e = eliminate(J, 1);
  CHECK(e.ring()->names() == std::vector<std::string>{"x", "y"});
  CHECK(e == Ideal(e.ring(), {parse("x^3 - y^2", e.ring())}));
  CHECK(eliminate(J, 0) == J);
}

TEST_CASE("elimination agrees with the resultant on the bivariate corpus") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (auto& ent : fs::directory_iterator(fs::path(EFV_DATA_DIR) / "ideals" / "bivariate")) {
    auto it = poly::read_ideal_file(ent.path().string());
    REQUIRE(it.gens.size() == 2);
    CAPTURE(ent.path().filename().string());
    auto e = eliminate(Ideal(it.ring, it.gens), 1);
    REQUIRE(e.basis().size() == 1);
    Polynomial h = poly::embed(e.basis().polys()[0], it.ring);
    Polynomial res = test::resultant_t(it.gens[0], it.gens[1]);
    REQUIRE_FALSE(res.is_zero());
    // res = c * h^k with k >= 1
    int k = 0;
    while (!res.is_constant()) {
      auto q = poly::divide_exact(res, h);
      REQUIRE(q.has_value());
      res = *q;
      ++k;
    }
    CHECK(k >= 1);
    ++seen;
  }
  CHECK(seen >= 5);
}

TEST_CASE("saturation") {
  auto r = Ring::make({"x", "y"});
  auto J = I(r, {"x^2*y"});
  auto x = parse("x", r);
  CHECK(saturate(J, x) == I(r, {"y"}));
  CHECK(saturate(J, x, SatMethod::Rabinowitsch) == I(r, {"y"}));
  CHECK(saturate_by_variable(J, 0) == I(r, {"y"}));
  CHECK(quotient(J, x) == I(r, {"x*y"}));
}

TEST_CASE("saturated product of two coordinate points in P13") {
  auto r = Ring::indexed("w", 14);
  std::vector<int> a, b;
  for (int i = 0; i < 14; ++i) {
    if (i != 0) a.push_back(i);
    if (i != 1) b.push_back(i);
  }
  Ideal P = Ideal::vars(r, a), Q = Ideal::vars(r, b);
  Ideal sat = saturate_irrelevant(P * Q);
  CHECK(sat == intersect(P, Q));
  auto h = hilbert(sat);
  CHECK(h.projective_dim == 0);
  CHECK(h.degree == 2);
}

TEST_CASE("vertex of a trihedron by saturation") {
  auto r = S();
  auto planes = I(r, {"s_3", "s_1 + s_3", "s_2 + s_3"});
  auto v = saturate_irrelevant(planes);
  CHECK(v == I(r, {"s_1", "s_2", "s_3"}));
  auto h = hilbert(v);
  CHECK(h.projective_dim == 0);
  CHECK(h.degree == 1);
}

TEST_CASE("saturation is idempotent") {
  gf::Rng rng(77);
  auto r = S();
  for (int t = 0; t < 6; ++t) {
    auto g = random_system(r, rng, 3, true);
    Ideal J(r, g);
    auto f = poly::random_form(r, 1, rng);
    Ideal s1 = saturate(J, f);
    CHECK(saturate(s1, f) == s1);
    CHECK(s1.contains(J));
    Ideal s2 = saturate_by_variable(J, 2);
    CHECK(saturate_by_variable(s2, 2) == s2);
    CHECK(s2 == saturate(J, Polynomial::var(r, 2)));
  }
}

TEST_CASE("intersection and quotient") {
  auto r = Ring::make({"x", "y", "z"});
  auto a = I(r, {"x", "y"}), b = I(r, {"y", "z"});
  CHECK(intersect(a, b) == I(r, {"y", "x*z"}));
  CHECK(quotient(intersect(a, b), b) == a);
  CHECK(intersect(a, Ideal::unit(r)) == a);
  CHECK(quotient(a, parse("x", r)).is_unit());
}

TEST_CASE("Hilbert data") {
  auto r = S();
  gf::Rng rng(5);
  // Hypersurface of degree 6.
  Ideal h6(r, {poly::random_form(r, 6, rng)});
  auto h = hilbert(h6);
  CHECK(h.projective_dim == 2);
  CHECK(h.degree == 6);
  // Monomial ideal <s_0^2 s_1, s_2^3>: closed form of the numerator.
  auto hm = hilbert(I(r, {"s_0^2*s_1", "s_2^3"}));
  CHECK(hm.numerator == std::vector<std::int64_t>{1, 0, 0, -2, 0, 0, 1});
  CHECK(hm.projective_dim == 1);
  CHECK(hm.degree == 9);
  CHECK(hilbert(Ideal::unit(r)).projective_dim == -1);
  CHECK(hilbert(Ideal::zero(r)).projective_dim == 3);
  CHECK(hilbert(Ideal::zero(r)).degree == 1);
  // Plane cubic: genus 1.
  auto cubic = hilbert(I(r, {"s_3", "s_0^3 + s_1^3 + s_2^3"}));
  CHECK(cubic.curve_genus() == 1);
  CHECK_THROWS(h.curve_genus());
  CHECK_THROWS(hilbert(I(r, {"s_0 - 1"})));
  // Hilbert function from the series equals graded piece codimension.
  Ideal tc = I(r, {"s_1^2 - s_0*s_2", "s_1*s_2 - s_0*s_3", "s_2^2 - s_1*s_3"});
  auto ht = hilbert(tc);
  for (int d = 0; d < 6; ++d) {
    std::int64_t all = static_cast<std::int64_t>(poly::monomials_of_degree(4, d).size());
    CHECK(ht.hilbert_function(d) == all - static_cast<std::int64_t>(graded_piece(tc, d).size()));
    CHECK(ht.hilbert_function(d) == 3 * d + 1);
  }
  CHECK(ht.polynomial_at(10).num == 31);
}

TEST_CASE("graded pieces") {
  auto r = S();
  auto two = intersect(Ideal::vars(r, {1, 2, 3}), Ideal::vars(r, {0, 2, 3}));
  auto g1 = graded_piece(two, 1);
  CHECK(g1.size() == 2);
  for (auto& f : g1) CHECK(two.contains(f));
  gf::Rng rng(12);
  Ideal J(r, random_system(r, rng, 3, true));
  for (int d = 0; d < 5; ++d) CHECK(graded_piece(J, d + 1).size() >= graded_piece(J, d).size());
}

TEST_CASE("double lines: linear system equals graded piece of the square") {
  auto r = S();
  // The six edges of the coordinate tetrahedron.
  std::vector<Condition> conds;
  Ideal square_meet = Ideal::unit(r);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> vs;
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) vs.push_back(k);
      Ideal l = Ideal::vars(r, vs);
      conds.push_back({l, 2});
      square_meet = intersect(square_meet, l * l);
    }
  auto sys = linear_system(r, conds, 6);
  CHECK(sys.size() == 14);
  CHECK(graded_piece(square_meet, 6).size() == 14);
  for (auto& f : sys) {
    CHECK(square_meet.contains(f));
    for (auto& c : conds) CHECK(vanishes_to_order(f, c.locus, 2));
  }
}

TEST_CASE("decomposition check") {
  auto r = Ring::make({"x", "y", "z"});
  auto dc = verify_decomposition(I(r, {"x*y"}), {I(r, {"x"}), I(r, {"y"})});
  CHECK(dc.all_contained);
  CHECK(dc.residual.is_unit());
  auto bad = verify_decomposition(I(r, {"x*y"}), {I(r, {"x"}), I(r, {"z"})});
  CHECK_FALSE(bad.all_contained);
  CHECK(bad.contained == std::vector<bool>{true, false});
}
