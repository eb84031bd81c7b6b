#include "efv/polynomial.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace efv::poly {

using namespace efv::gf;

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block:
    case OrderKind::Weighted: {
      std::string s = kind_ == OrderKind::Block ? "block(" + std::to_string(k_) : "weighted(";
      if (kind_ == OrderKind::Block && !w_.empty()) s += ";";
      for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
      return s + ")";
    }
  }
  return "?";
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many ring variables");
}

RingPtr Ring::make(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

RingPtr Ring::indexed(const std::string& base, int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(base + "_" + std::to_string(i));
  return make(std::move(v));
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr Ring::prepend(const std::vector<std::string>& extra) const {
  std::vector<std::string> v = extra;
  v.insert(v.end(), names_.begin(), names_.end());
  return make(std::move(v));
}

RingPtr Ring::append(const std::vector<std::string>& extra) const {
  std::vector<std::string> v = names_;
  v.insert(v.end(), extra.begin(), extra.end());
  return make(std::move(v));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace {

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr r, u32 c) {
  Polynomial p(std::move(r));
  c %= Field::prime();
  if (c) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::var(RingPtr r, int i) {
  if (i < 0 || i >= r->nvars()) throw std::out_of_range("variable index");
  Polynomial p(std::move(r));
  p.terms_.push_back({Monomial::var(i), 1});
  return p;
}

Polynomial Polynomial::term(RingPtr r, const Monomial& m, u32 c) {
  Polynomial p(std::move(r));
  if (c) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr r, std::vector<Term> terms) {
  const int n = r->nvars();
  std::sort(terms.begin(), terms.end(),
            [n](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m, n); });
  Polynomial p(std::move(r));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = add(p.terms_.back().c, t.c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c % Field::prime()) {
      p.terms_.push_back({t.m, t.c % Field::prime()});
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr r, std::vector<Term> terms) {
  Polynomial p(std::move(r));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::low_degree() const {
  int d = -1;
  for (auto& t : terms_)
    if (d < 0 || t.m.deg() < d) d = t.m.deg();
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.m.deg() != terms_.front().m.deg()) return false;
  return true;
}

Term Polynomial::lead(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  if (ord.kind() == OrderKind::Grevlex) return terms_.front();
  const int n = nvars();
  const Term* best = &terms_.front();
  for (auto& t : terms_)
    if (ord.compare(t.m, best->m, n) > 0) best = &t;
  return *best;
}

u32 Polynomial::coeff(const Monomial& m) const {
  const int n = nvars();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [n](const Term& t, const Monomial& x) { return grevlex_greater(t.m, x, n); });
  return (it != terms_.end() && it->m == m) ? it->c : 0;
}

Monomial Polynomial::content_monomial() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().m;
  for (auto& t : terms_) g = Monomial::gcd(g, t.m, nvars());
  return g;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(ring_);
  for (auto& t : terms_)
    if (t.m.deg() == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(inv(terms_.front().c));
}

Polynomial Polynomial::scaled(u32 c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (auto& t : terms_) p.terms_.push_back({t.m, mul(t.c, c)});
  return p;
}

Polynomial Polynomial::times(const Monomial& m, u32 c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (auto& t : terms_) p.terms_.push_back({t.m * m, mul(t.c, c)});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(neg(1)); }

namespace {

template <bool Subtract>
Polynomial merge(const Polynomial& a, const Polynomial& b) {
  check_ring(a, b);
  const int n = a.nvars();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && grevlex_greater(ia->m, ib->m, n))) {
      out.push_back(*ia++);
    } else if (ia == ea || grevlex_greater(ib->m, ia->m, n)) {
      out.push_back({ib->m, Subtract ? neg(ib->c) : ib->c});
      ++ib;
    } else {
      u32 c = Subtract ? sub(ia->c, ib->c) : add(ia->c, ib->c);
      if (c) out.push_back({ia->m, c});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_sorted(a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge<false>(a, b); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge<true>(a, b); }

// Heap merge of the sorted runs a_i * b.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  const Polynomial& x = a.size() <= b.size() ? a : b;
  const Polynomial& y = a.size() <= b.size() ? b : a;
  const int n = a.nvars();
  struct Entry {
    Monomial m;
    std::uint32_t i, j;
  };
  auto cmp = [n](const Entry& p, const Entry& q) { return grevlex_greater(q.m, p.m, n); };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  const auto& xt = x.terms();
  const auto& yt = y.terms();
  for (std::uint32_t i = 0; i < xt.size(); ++i) heap.push({xt[i].m * yt[0].m, i, 0});
  std::vector<Term> out;
  while (!heap.empty()) {
    Monomial m = heap.top().m;
    u64 acc = 0;
    int cnt = 0;
    while (!heap.empty() && heap.top().m == m) {
      Entry e = heap.top();
      heap.pop();
      acc += static_cast<u64>(xt[e.i].c) * yt[e.j].c;
      if (++cnt == 60000) {
        acc = reduce(acc);
        cnt = 0;
      }
      if (e.j + 1 < yt.size()) heap.push({xt[e.i].m * yt[e.j + 1].m, e.i, e.j + 1});
    }
    u32 c = reduce(acc);
    if (c) out.push_back({m, c});
  }
  return Polynomial::from_sorted(a.ring(), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.terms()[i].m != b.terms()[i].m || a.terms()[i].c != b.terms()[i].c) return false;
  return true;
}

Polynomial derivative(const Polynomial& f, int var) {
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    int e = t.m[var];
    if (e == 0) continue;
    u32 c = mul(t.c, static_cast<u32>(e) % Field::prime());
    if (!c) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

namespace {

// Power cache for substitution.
struct Powers {
  std::vector<std::vector<Polynomial>> p;
  const Polynomial& get(const std::vector<Polynomial>& images, int i, int e) {
    auto& v = p[static_cast<std::size_t>(i)];
    if (v.empty()) {
      v.push_back(Polynomial::constant(images[static_cast<std::size_t>(i)].ring(), 1));
    }
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(e)];
  }
};

}  // namespace

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const int n = f.nvars();
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitute: need one image per variable");
  RingPtr target = images.empty() ? f.ring() : images[0].ring();
  for (auto& g : images)
    if (!same_ring(g.ring(), target)) throw std::invalid_argument("substitute: images in different rings");
  Powers pw;
  pw.p.resize(static_cast<std::size_t>(n));
  // Sum of products; accumulate through a hash map to keep it linear.
  std::unordered_map<Monomial, u32, MonomialHash> acc;
  for (auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (int i = 0; i < n && !prod.is_zero(); ++i)
      if (t.m[i]) prod = prod * pw.get(images, i, t.m[i]);
    for (auto& u : prod.terms()) {
      auto [it, ins] = acc.emplace(u.m, u.c);
      if (!ins) it->second = add(it->second, u.c);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) out.push_back({m, c});
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& images) {
  std::vector<Polynomial> full;
  for (int i = 0; i < f.nvars(); ++i) {
    auto it = images.find(i);
    full.push_back(it != images.end() ? it->second : Polynomial::var(f.ring(), i));
  }
  for (auto& [i, g] : images)
    if (!same_ring(g.ring(), f.ring())) throw std::invalid_argument("substitute: image outside the ring");
  return substitute(f, full);
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target, const std::vector<int>& index_map) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.nvars(); ++i) {
      if (!t.m[i]) continue;
      int j = index_map.at(static_cast<std::size_t>(i));
      if (j < 0) throw std::invalid_argument("change_ring: variable has no image");
      m.set(j, m[j] + t.m[i]);
    }
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial embed(const Polynomial& f, const RingPtr& target) {
  std::vector<int> idx;
  for (int i = 0; i < f.nvars(); ++i) {
    int j = target->index_of(f.ring()->name(i));
    if (j < 0) throw std::invalid_argument("embed: undeclared variable " + f.ring()->name(i));
    idx.push_back(j);
  }
  return change_ring(f, target, idx);
}

Polynomial homogenize(const Polynomial& f, int var) {
  int d = f.degree();
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    Monomial m = t.m;
    m.set(var, m[var] + d - t.m.deg());
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, int var) {
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    Monomial m = t.m;
    m.set(var, 0);
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

u32 evaluate(const Polynomial& f, const std::vector<u32>& point) {
  u32 acc = 0;
  for (auto& t : f.terms()) {
    u32 v = t.c;
    for (int i = 0; i < f.nvars() && v; ++i)
      if (t.m[i]) v = mul(v, gf::pow(point[static_cast<std::size_t>(i)], static_cast<u64>(t.m[i])));
    acc = add(acc, v);
  }
  return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  check_ring(f, g);
  if (g.is_zero()) throw DivisionByZero();
  Polynomial r = f;
  std::vector<Term> q;
  const Term lg = g.lead();
  const u32 ilc = inv(lg.c);
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!lg.m.divides(lr.m)) return std::nullopt;
    Monomial m = lr.m / lg.m;
    u32 c = mul(lr.c, ilc);
    q.push_back({m, c});
    r = r - g.times(m, c);
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  // Enumerate exponent vectors recursively.
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      Monomial x;
      for (int k = 0; k < n; ++k) x.set(k, e[static_cast<std::size_t>(k)]);
      out.push_back(x);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [n](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b, n); });
  return out;
}

Polynomial random_form(const RingPtr& r, int degree, gf::Rng& rng) {
  std::vector<Term> t;
  for (auto& m : monomials_of_degree(r->nvars(), degree)) t.push_back({m, rng.element()});
  return Polynomial::from_terms(r, std::move(t));
}

Polynomial random_combination(const std::vector<Polynomial>& forms, gf::Rng& rng) {
  if (forms.empty()) throw std::invalid_argument("random_combination of nothing");
  Polynomial acc(forms[0].ring());
  for (auto& f : forms) acc += f.scaled(rng.element());
  return acc;
}

Polynomial linear_change(const Polynomial& f, const std::vector<std::vector<u32>>& m) {
  std::vector<Polynomial> images;
  for (int i = 0; i < f.nvars(); ++i) {
    std::vector<Term> t;
    for (int j = 0; j < f.nvars(); ++j) t.push_back({Monomial::var(j), m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    images.push_back(Polynomial::from_terms(f.ring(), std::move(t)));
  }
  return substitute(f, images);
}

}  // namespace efv::poly
