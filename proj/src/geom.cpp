#include "efv/geom.hpp"

#include <algorithm>
#include <stdexcept>

#include "efv/linalg.hpp"

namespace efv::geom {

using namespace efv::gf;
using poly::Monomial;
using poly::Ring;
using poly::Term;

ProjectivePoint::ProjectivePoint(std::vector<u32> coords) : c_(std::move(coords)) {
  auto it = std::find_if(c_.begin(), c_.end(), [](u32 v) { return v != 0; });
  if (it == c_.end()) throw std::invalid_argument("ProjectivePoint: all coordinates zero");
  u32 s = inv(*it);
  for (auto& v : c_) v = mul(v, s);
}

ProjectivePoint ProjectivePoint::from_ints(const std::vector<std::int64_t>& coords) {
  std::vector<u32> c;
  for (auto v : coords) c.push_back(from_int(v));
  return ProjectivePoint(std::move(c));
}

ProjectivePoint ProjectivePoint::coordinate(int n, int i) {
  std::vector<u32> c(static_cast<std::size_t>(n + 1), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return ProjectivePoint(std::move(c));
}

int ProjectivePoint::pivot() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return -1;
}

Ideal ProjectivePoint::ideal(const RingPtr& ring) const {
  if (ring->nvars() != static_cast<int>(c_.size())) throw std::invalid_argument("ProjectivePoint::ideal: dimension mismatch");
  const int k = pivot();
  std::vector<Polynomial> g;
  for (int j = 0; j < ring->nvars(); ++j) {
    if (j == k) continue;
    g.push_back(Polynomial::var(ring, j) - Polynomial::var(ring, k).scaled(c_[static_cast<std::size_t>(j)]));
  }
  return Ideal(ring, std::move(g));
}

std::string ProjectivePoint::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ":";
    s += std::to_string(to_signed(c_[i]));
  }
  return s + "]";
}

namespace {

DenseMatrix linear_matrix(const std::vector<Polynomial>& forms, int n) {
  DenseMatrix m(forms.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (auto& t : forms[r].terms()) {
      if (t.m.deg() != 1) throw std::invalid_argument("expected linear forms");
      for (int j = 0; j < n; ++j)
        if (t.m[j]) m.at(r, static_cast<std::size_t>(j)) = t.c;
    }
  return m;
}

Polynomial linear_form(const RingPtr& r, const std::vector<u32>& v) {
  std::vector<Term> t;
  for (int j = 0; j < r->nvars(); ++j)
    if (v[static_cast<std::size_t>(j)]) t.push_back({Monomial::var(j), v[static_cast<std::size_t>(j)]});
  return Polynomial::from_terms(r, std::move(t));
}

// Nonzero scalar c with a = c*b, if any.
std::optional<u32> ratio(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size() || b.is_zero()) return std::nullopt;
  u32 c = mul(a.terms()[0].c, inv(b.terms()[0].c));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.terms()[i].m != b.terms()[i].m || a.terms()[i].c != mul(c, b.terms()[i].c)) return std::nullopt;
  return c;
}

std::optional<ProjectivePoint> proportional(const std::vector<Polynomial>& v) {
  const Polynomial* base = nullptr;
  for (auto& f : v)
    if (!f.is_zero()) {
      base = &f;
      break;
    }
  if (!base) return std::nullopt;
  std::vector<u32> c;
  for (auto& f : v) {
    if (f.is_zero()) {
      c.push_back(0);
      continue;
    }
    auto r = ratio(f, *base);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return ProjectivePoint(std::move(c));
}

}  // namespace

std::optional<ProjectivePoint> point_of(const Ideal& Z) {
  auto lin = gb::graded_piece(Z, 1);
  const int n = Z.nvars();
  if (static_cast<int>(lin.size()) != n - 1) return std::nullopt;
  auto r = rref_copy(linear_matrix(lin, n));
  if (r.kernel.size() != 1) return std::nullopt;
  return ProjectivePoint(r.kernel[0]);
}

RationalMap::RationalMap(RingPtr source, RingPtr target, std::vector<Polynomial> forms,
                         std::optional<Ideal> source_ideal)
    : source_(std::move(source)), target_(std::move(target)), forms_(std::move(forms)),
      source_ideal_(std::move(source_ideal)) {
  if (static_cast<int>(forms_.size()) != target_->nvars())
    throw std::invalid_argument("RationalMap: one form per target variable required");
  degree_ = -1;
  for (auto& f : forms_) {
    if (!poly::same_ring(f.ring(), source_)) throw std::invalid_argument("RationalMap: form from another ring");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("RationalMap: forms must be homogeneous");
    if (degree_ < 0) degree_ = f.degree();
    if (f.degree() != degree_) throw std::invalid_argument("RationalMap: forms of different degrees");
  }
  if (degree_ < 0) throw std::invalid_argument("RationalMap: all forms are zero");
  if (source_ideal_ && !poly::same_ring(source_ideal_->ring(), source_))
    throw std::invalid_argument("RationalMap: source ideal from another ring");
}

Ideal RationalMap::base_locus() const {
  Ideal b(source_, forms_);
  return source_ideal_ ? b + *source_ideal_ : b;
}

RationalMap RationalMap::restricted(const Ideal& Z) const {
  return RationalMap(source_, target_, forms_, source_ideal_ ? *source_ideal_ + Z : Z);
}

ProjectivePoint RationalMap::operator()(const ProjectivePoint& p) const {
  std::vector<u32> v;
  for (auto& f : forms_) v.push_back(poly::evaluate(f, p.coords()));
  if (std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; }))
    throw std::domain_error("RationalMap: point in the base locus");
  return ProjectivePoint(std::move(v));
}

std::optional<ProjectivePoint> contracted_image(const RationalMap& m, const Ideal& Z) {
  Ideal full = m.source_ideal() ? Z + *m.source_ideal() : Z;
  const auto& b = full.basis();
  std::vector<Polynomial> nf;
  for (auto& f : m.forms()) nf.push_back(b.normal_form(f));
  return proportional(nf);
}

std::vector<std::vector<u32>> moving_frame(const ProjectivePoint& p) {
  const std::size_t n = p.coords().size();
  const std::size_t k = static_cast<std::size_t>(p.pivot());
  std::vector<std::vector<u32>> a(n, std::vector<u32>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][0] = p.coords()[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    a[j][col++] = 1;
  }
  return a;
}

namespace {

// Names of the variables other than the pivot, in order.
RingPtr cone_ring(const RingPtr& r, int pivot) {
  std::vector<std::string> names;
  for (int j = 0; j < r->nvars(); ++j)
    if (j != pivot) names.push_back(r->name(j));
  return Ring::make(std::move(names));
}

// Lowest-order part at y_0 = 1 of a form in moved coordinates, as a form in
// the remaining variables.
Polynomial lowest_part(const Polynomial& g, const RingPtr& cr, int* order) {
  const int n = g.nvars();
  int top = -1;
  for (auto& t : g.terms()) top = std::max(top, t.m[0]);
  std::vector<Term> out;
  for (auto& t : g.terms()) {
    if (t.m[0] != top) continue;
    Monomial m;
    for (int j = 1; j < n; ++j) m.set(j - 1, t.m[j]);
    out.push_back({m, t.c});
  }
  Polynomial p = Polynomial::from_terms(cr, std::move(out));
  if (order) *order = p.is_zero() ? -1 : p.degree();
  return p;
}

}  // namespace

std::optional<ProjectivePoint> exceptional_image(const RationalMap& m, const ProjectivePoint& P) {
  auto a = moving_frame(P);
  RingPtr cr = cone_ring(m.source(), P.pivot());
  std::vector<Polynomial> low;
  int best = -1;
  std::vector<int> ord;
  for (auto& f : m.forms()) {
    if (f.is_zero()) {
      low.emplace_back(cr);
      ord.push_back(-1);
      continue;
    }
    int o = 0;
    low.push_back(lowest_part(poly::linear_change(f, a), cr, &o));
    ord.push_back(o);
    if (o >= 0 && (best < 0 || o < best)) best = o;
  }
  if (best < 0) return std::nullopt;
  for (std::size_t i = 0; i < low.size(); ++i)
    if (ord[i] != best) low[i] = Polynomial(cr);
  if (m.source_ideal()) {
    // Directions tangent to the source variety only.
    auto tc = tangent_cone(*m.source_ideal(), P);
    for (auto& l : low) l = tc.cone.normal_form(l);
  }
  return proportional(low);
}

Ideal pullback(const RationalMap& m, const Ideal& J) {
  if (!poly::same_ring(J.ring(), m.target())) throw std::invalid_argument("pullback: ring mismatch");
  std::vector<Polynomial> g;
  for (auto& f : J.gens()) g.push_back(poly::substitute(f, m.forms()));
  Ideal K(m.source(), std::move(g));
  if (m.source_ideal()) K = K + *m.source_ideal();
  if (K.is_unit()) return K;
  return gb::saturate(K, Ideal(m.source(), m.forms()));
}

RationalMap compose(const RationalMap& first, const RationalMap& second) {
  if (!poly::same_ring(first.target(), second.source())) throw std::invalid_argument("compose: ring mismatch");
  std::vector<Polynomial> f;
  for (auto& g : second.forms()) f.push_back(poly::substitute(g, first.forms()));
  // Divide out the largest common monomial factor.
  std::optional<Monomial> common;
  const int n = first.source()->nvars();
  for (auto& p : f) {
    if (p.is_zero()) continue;
    Monomial c = p.content_monomial();
    common = common ? Monomial::gcd(*common, c, n) : c;
  }
  if (common && common->deg() > 0) {
    for (auto& p : f) {
      std::vector<Term> t;
      for (auto& x : p.terms()) t.push_back({x.m / *common, x.c});
      p = Polynomial::from_sorted(first.source(), std::move(t));
    }
  }
  return RationalMap(first.source(), second.target(), std::move(f), first.source_ideal());
}

RationalMap linear_projection(const Ideal& linear, const std::string& target_base) {
  auto forms = gb::graded_piece(linear, 1);
  if (forms.empty()) throw std::invalid_argument("linear_projection: no linear forms");
  // Ascending leading terms.
  std::reverse(forms.begin(), forms.end());
  RingPtr t = Ring::indexed(target_base, static_cast<int>(forms.size()));
  return RationalMap(linear.ring(), t, std::move(forms));
}

Ideal linear_span(const Ideal& Z) { return Ideal(Z.ring(), gb::graded_piece(Z, 1)); }

Ideal line_through(const ProjectivePoint& p, const ProjectivePoint& q, const RingPtr& ring) {
  if (p == q) throw std::invalid_argument("line_through: points coincide");
  const std::size_t n = p.coords().size();
  if (static_cast<int>(n) != ring->nvars() || q.coords().size() != n)
    throw std::invalid_argument("line_through: dimension mismatch");
  DenseMatrix m(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    m.at(0, j) = p.coords()[j];
    m.at(1, j) = q.coords()[j];
  }
  auto r = rref_copy(m);
  std::vector<Polynomial> g;
  for (auto& v : r.kernel) g.push_back(linear_form(ring, v));
  return Ideal(ring, std::move(g));
}

bool lies_on(const Ideal& L, const Ideal& W) { return L.contains(W); }

Polynomial initial_form(const Polynomial& f, const ProjectivePoint& P) {
  if (static_cast<int>(P.coords().size()) != f.nvars()) throw std::invalid_argument("initial_form: dimension mismatch");
  return lowest_part(poly::linear_change(f, moving_frame(P)), cone_ring(f.ring(), P.pivot()), nullptr);
}

TangentCone tangent_cone(const Ideal& I, const ProjectivePoint& P) {
  if (!I.is_homogeneous()) throw std::invalid_argument("tangent_cone: ideal is not homogeneous");
  for (auto& g : I.gens())
    if (poly::evaluate(g, P.coords()) != 0) throw std::domain_error("tangent_cone: point not on the variety");
  const int n = I.nvars();
  auto a = moving_frame(P);
  std::vector<Polynomial> moved;
  for (auto& g : I.gens()) moved.push_back(poly::linear_change(g, a));
  Ideal J = gb::saturate_by_variable(Ideal(I.ring(), std::move(moved)), 0);
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  w[0] = 2;
  const auto& b = J.basis(poly::MonomialOrder::weighted(w));
  RingPtr cr = cone_ring(I.ring(), P.pivot());
  std::vector<Polynomial> cone;
  for (auto& g : b.polys()) cone.push_back(lowest_part(g, cr, nullptr));
  TangentCone tc;
  tc.cone = Ideal(cr, std::move(cone));
  auto h = gb::hilbert(tc.cone);
  tc.multiplicity = h.degree;
  tc.projective_dim = h.projective_dim;
  return tc;
}

namespace {

Polynomial det(std::vector<std::vector<Polynomial>> m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(std::move(row));
    }
    Polynomial t = m[0][c] * det(std::move(sub));
    acc = (c % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Ideal singular_locus(const Ideal& I, int codim) {
  const int n = I.nvars();
  if (codim < 0) {
    auto h = gb::hilbert(I);
    codim = n - (h.projective_dim + 1);
  }
  if (codim < 1 || codim > 3) throw std::invalid_argument("singular_locus: codimension must be 1, 2 or 3");
  const auto& gens = I.gens();
  std::vector<std::vector<Polynomial>> jac;
  for (auto& g : gens) {
    std::vector<Polynomial> row;
    for (int j = 0; j < n; ++j) row.push_back(poly::derivative(g, j));
    jac.push_back(std::move(row));
  }
  std::vector<std::vector<int>> rows, cols;
  std::vector<int> cur;
  subsets(static_cast<int>(gens.size()), codim, 0, cur, rows);
  subsets(n, codim, 0, cur, cols);
  std::vector<Polynomial> out = gens;
  for (auto& rs : rows)
    for (auto& cs : cols) {
      std::vector<std::vector<Polynomial>> m;
      for (int r : rs) {
        std::vector<Polynomial> row;
        for (int c : cs) row.push_back(jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        m.push_back(std::move(row));
      }
      Polynomial d = det(std::move(m));
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return Ideal(I.ring(), std::move(out));
}

}  // namespace efv::geom
