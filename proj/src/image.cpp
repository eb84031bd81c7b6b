// Images of rational maps: exact elimination and degree-by-degree kernels.

#include <stdexcept>
#include <unordered_map>

#include "efv/geom.hpp"
#include "efv/linalg.hpp"

namespace efv::geom {

using namespace efv::gf;
using poly::Monomial;
using poly::Ring;
using poly::Term;

std::string ImageResult::label() const {
  if (mode == ImageMode::Elimination) return "elimination";
  std::string s = "degreewise:" + std::to_string(last_degree);
  return s + (stabilized ? " (stabilized)" : " (not stabilized)");
}

namespace {

std::vector<std::string> fresh_names(const RingPtr& avoid, const std::string& base, int k) {
  std::vector<std::string> out;
  for (int i = 0; static_cast<int>(out.size()) < k; ++i) {
    std::string s = base + "_" + std::to_string(i);
    if (avoid->index_of(s) < 0) out.push_back(s);
  }
  return out;
}

// Kernel of the graded map by elimination from the graph ideal.
Ideal eliminate_graph(const RationalMap& m) {
  const int ns = m.source()->nvars();
  std::vector<std::string> names = m.source()->names();
  for (auto& t : m.target()->names()) {
    if (m.source()->index_of(t) >= 0) throw std::invalid_argument("image: source and target share a variable name");
    names.push_back(t);
  }
  RingPtr e = Ring::make(names);
  std::vector<Polynomial> g;
  if (m.source_ideal())
    for (auto& f : m.source_ideal()->gens()) g.push_back(poly::embed(f, e));
  for (int i = 0; i < m.target()->nvars(); ++i)
    g.push_back(Polynomial::var(e, ns + i) - poly::embed(m.forms()[static_cast<std::size_t>(i)], e));
  // Target variables carry the degree of the forms, making the graph
  // ideal homogeneous.
  std::vector<int> w(static_cast<std::size_t>(ns), 1);
  w.resize(names.size(), m.degree());
  return gb::embed(gb::eliminate(Ideal(e, std::move(g)), ns, w), m.target());
}

// Linear map restricted to a variety: complete the forms to a coordinate
// system and eliminate the complementary coordinates.
std::optional<Ideal> eliminate_linear(const RationalMap& m) {
  if (m.degree() != 1 || !m.source_ideal()) return std::nullopt;
  const int n = m.source()->nvars();
  const int k = m.target()->nvars();
  DenseMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (int r = 0; r < k; ++r)
    for (auto& t : m.forms()[static_cast<std::size_t>(r)].terms())
      for (int j = 0; j < n; ++j)
        if (t.m[j]) a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) = t.c;
  DenseMatrix red = a;
  auto piv = rref_serial(red);
  if (static_cast<int>(piv.size()) != k) return std::nullopt;
  std::vector<int> comp;
  for (int j = 0, p = 0; j < n; ++j) {
    if (p < k && static_cast<int>(piv[static_cast<std::size_t>(p)]) == j) {
      ++p;
      continue;
    }
    comp.push_back(j);
  }
  const int c = n - k;
  // New coordinates: (x_comp, forms). Rows of the full matrix express them in x.
  DenseMatrix full(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n));
  for (int r = 0; r < c; ++r) full.at(static_cast<std::size_t>(r), static_cast<std::size_t>(comp[static_cast<std::size_t>(r)])) = 1;
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < n; ++j) full.at(static_cast<std::size_t>(c + r), static_cast<std::size_t>(j)) = a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
  for (int r = 0; r < n; ++r) full.at(static_cast<std::size_t>(r), static_cast<std::size_t>(n + r)) = 1;
  auto fp = rref_serial(full);
  if (static_cast<int>(fp.size()) < n || static_cast<int>(fp[static_cast<std::size_t>(n - 1)]) != n - 1)
    throw std::logic_error("eliminate_linear: completion is singular");
  // x_j = sum_r inv[j][r] * u_r
  std::vector<std::string> names = fresh_names(m.target(), "aux", c);
  for (auto& t : m.target()->names()) names.push_back(t);
  RingPtr e = Ring::make(names);
  std::vector<Polynomial> images;
  for (int j = 0; j < n; ++j) {
    std::vector<Term> t;
    for (int r = 0; r < n; ++r) {
      u32 v = full.at(static_cast<std::size_t>(j), static_cast<std::size_t>(n + r));
      if (v) t.push_back({Monomial::var(r), v});
    }
    images.push_back(Polynomial::from_terms(e, std::move(t)));
  }
  std::vector<Polynomial> g;
  for (auto& f : m.source_ideal()->gens()) g.push_back(poly::substitute(f, images));
  return gb::embed(gb::eliminate(Ideal(e, std::move(g)), c), m.target());
}

ImageResult degreewise(const RationalMap& m, const ImageOptions& opt) {
  const int max_d = opt.max_degree;
  const RingPtr& t = m.target();
  const int nt = t->nvars();
  std::optional<gb::GroebnerBasis> src;
  if (m.source_ideal()) src = m.source_ideal()->basis();
  ImageResult res;
  res.mode = ImageMode::Degreewise;
  res.image_hf.push_back(1);
  std::unordered_map<Monomial, Polynomial, poly::MonomialHash> prev;
  prev.emplace(Monomial(), Polynomial::constant(m.source(), 1));
  std::vector<Polynomial> gens;
  Ideal J = Ideal::zero(t);
  std::optional<gb::HilbertData> last_h;
  int stable_rounds = 0;
  for (int e = 1; e <= max_d; ++e) {
    auto monos = poly::monomials_of_degree(nt, e);
    std::unordered_map<Monomial, Polynomial, poly::MonomialHash> cur;
    std::unordered_map<Monomial, u32, poly::MonomialHash> rowid;
    std::vector<SparseRow> rows;
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const Monomial& a = monos[j];
      int i = 0;
      while (a[i] == 0) ++i;
      Polynomial p = prev.at(a / Monomial::var(i)) * m.forms()[static_cast<std::size_t>(i)];
      if (src) p = src->normal_form(p);
      for (auto& term : p.terms()) {
        auto [it, fresh] = rowid.emplace(term.m, static_cast<u32>(rows.size()));
        if (fresh) rows.emplace_back();
        rows[it->second].emplace_back(static_cast<u32>(j), term.c);
      }
      cur.emplace(a, std::move(p));
    }
    auto ker = sparse_rref_kernel(std::move(rows), monos.size());
    res.image_hf.push_back(static_cast<std::int64_t>(ker.rank));
    // New generators: relations reduced modulo the lower-degree ones.
    const auto& b = J.basis();
    std::vector<SparseRow> nf_rows;
    std::unordered_map<Monomial, std::size_t, poly::MonomialHash> col_of;
    for (std::size_t j = 0; j < monos.size(); ++j) col_of.emplace(monos[j], j);
    for (auto& v : ker.kernel) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < monos.size(); ++j)
        if (v[j]) terms.push_back({monos[j], v[j]});
      Polynomial r = b.normal_form(Polynomial::from_sorted(t, std::move(terms)));
      if (r.is_zero()) continue;
      SparseRow row;
      for (auto& x : r.terms()) row.emplace_back(static_cast<u32>(col_of.at(x.m)), x.c);
      nf_rows.push_back(std::move(row));
    }
    const bool added = !nf_rows.empty();
    if (added) {
      for (auto& row : sparse_rref(std::move(nf_rows), monos.size(), nullptr)) {
        std::vector<Term> terms;
        for (auto& [j, c] : row) terms.push_back({monos[j], c});
        gens.push_back(Polynomial::from_sorted(t, std::move(terms)));
      }
      J = Ideal(t, gens);
    }
    auto h = gb::hilbert(J);
    for (int d = 0; d <= e; ++d)
      if (h.hilbert_function(d) != res.image_hf[static_cast<std::size_t>(d)])
        throw std::logic_error("degreewise image: Hilbert function mismatch");
    if (last_h && last_h->hilbert_polynomial == h.hilbert_polynomial)
      ++stable_rounds;
    else
      stable_rounds = 0;
    last_h = h;
    res.last_degree = e;
    prev = std::move(cur);
    // Stop once a nonzero ideal keeps its Hilbert polynomial through a
    // degree that brings no new generators.
    const bool matches = opt.expected_dim < 0 || (h.projective_dim == opt.expected_dim && h.degree == opt.expected_degree);
    if (stable_rounds >= 1 && e >= 2 && !added && !gens.empty() && matches) {
      res.stabilized = true;
      break;
    }
  }
  res.ideal = J;
  res.exact = false;
  return res;
}

}  // namespace

ImageResult image(const RationalMap& m, const ImageOptions& opt) {
  if (opt.mode == ImageMode::Degreewise) return degreewise(m, opt);
  ImageResult r;
  r.mode = ImageMode::Elimination;
  r.exact = true;
  r.stabilized = true;
  auto lin = eliminate_linear(m);
  r.ideal = lin ? *lin : eliminate_graph(m);
  return r;
}

namespace {

// J : l^infinity for a pseudo-random linear form l with nonzero last
// coefficient. Equals the saturation by the irrelevant ideal unless some
// component of V(J) lies in the hyperplane l = 0.
Ideal saturate_generic(const Ideal& J) {
  const int n = J.nvars();
  Rng rng(0x5eed);
  std::vector<u32> c(static_cast<std::size_t>(n));
  for (auto& v : c) v = rng.nonzero();
  c[static_cast<std::size_t>(n - 1)] = 1;
  auto shift = [&](const Polynomial& f, bool forward) {
    Polynomial img = Polynomial::var(J.ring(), n - 1);
    for (int j = 0; j < n - 1; ++j) {
      Polynomial x = Polynomial::var(J.ring(), j).scaled(c[static_cast<std::size_t>(j)]);
      img = forward ? img - x : img + x;
    }
    return poly::substitute(f, std::map<int, Polynomial>{{n - 1, img}});
  };
  std::vector<Polynomial> g;
  for (auto& f : J.gens()) g.push_back(shift(f, true));
  Ideal s = gb::saturate_by_variable(Ideal(J.ring(), std::move(g)), n - 1);
  std::vector<Polynomial> back;
  for (auto& f : s.gens()) back.push_back(shift(f, false));
  return Ideal(J.ring(), std::move(back));
}

}  // namespace

ImageResult apply_to_subvariety(const RationalMap& m, const Ideal& Z, const ImageOptions& opt) {
  ImageResult r = image(m.restricted(Z), opt);
  if (r.mode == ImageMode::Elimination && !r.ideal.is_zero()) r.ideal = saturate_generic(r.ideal);
  bool all_vars = true;
  for (int i = 0; i < m.target()->nvars() && all_vars; ++i)
    if (!r.ideal.contains(Polynomial::var(m.target(), i))) all_vars = false;
  if (all_vars) throw std::domain_error("apply_to_subvariety: subvariety lies in the base locus");
  return r;
}

}  // namespace efv::geom
