#include "efv/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace efv::gb {

using namespace efv::gf;
using poly::Ring;

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!poly::same_ring(g.ring(), ring_)) throw std::invalid_argument("Ideal: generator from another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::vars(const RingPtr& ring, const std::vector<int>& which) {
  std::vector<Polynomial> g;
  for (int i : which) g.push_back(Polynomial::var(ring, i));
  return Ideal(ring, std::move(g));
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& ord) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (auto& [o, b] : cache_->bases)
      if (o == ord) return *b;
  }
  auto gb = gens_.empty() ? std::make_shared<const GroebnerBasis>(ring_, ord, std::vector<std::vector<Term>>{})
                          : std::make_shared<const GroebnerBasis>(groebner(gens_, ord));
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (auto& [o, b] : cache_->bases)
    if (o == ord) return *b;
  cache_->bases.emplace_back(ord, gb);
  return *cache_->bases.back().second;
}

Ideal Ideal::trimmed() const {
  Ideal r(ring_, basis().polys());
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (auto& [o, b] : cache_->bases)
    if (o == MonomialOrder::grevlex()) r.cache_->bases.emplace_back(o, b);
  return r;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  for (auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::contains(const Ideal& J) const {
  if (!poly::same_ring(ring_, J.ring_)) throw std::invalid_argument("contains: ring mismatch");
  const GroebnerBasis& b = basis();
  if (b.is_unit()) return true;
  for (auto& g : J.gens_)
    if (!b.contains(g)) return false;
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!poly::same_ring(a.ring_, b.ring_)) return false;
  const auto& pa = a.basis().polys();
  const auto& pb = b.basis().polys();
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i] != pb[i]) return false;
  return true;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!poly::same_ring(ring_, other.ring_)) throw std::invalid_argument("ideal sum: ring mismatch");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator+(const Polynomial& f) const {
  std::vector<Polynomial> g = gens_;
  g.push_back(f);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (!poly::same_ring(ring_, other.ring_)) throw std::invalid_argument("ideal product: ring mismatch");
  std::vector<Polynomial> g;
  for (auto& a : gens_)
    for (auto& b : other.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal embed(const Ideal& I, const RingPtr& target) {
  std::vector<Polynomial> g;
  for (auto& f : I.gens()) g.push_back(poly::embed(f, target));
  return Ideal(target, std::move(g));
}

namespace {

std::string fresh_name(const RingPtr& r, const std::string& base) {
  for (int k = 0;; ++k) {
    std::string s = base + "_" + std::to_string(k);
    if (r->index_of(s) < 0) return s;
  }
}

}  // namespace

Ideal eliminate(const Ideal& I, int k) { return eliminate(I, k, {}); }

Ideal eliminate(const Ideal& I, int k, const std::vector<int>& weights) {
  if (k == 0) return I;
  const int n = I.nvars();
  if (k < 0 || k > n) throw std::invalid_argument("eliminate: bad block size");
  std::vector<std::string> rest(I.ring()->names().begin() + k, I.ring()->names().end());
  RingPtr sub = Ring::make(rest);
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (int i = k; i < n; ++i) idx[static_cast<std::size_t>(i)] = i - k;
  if (!weights.empty() && static_cast<int>(weights.size()) != n) throw std::invalid_argument("eliminate: weight count");
  const GroebnerBasis& b = I.basis(weights.empty() ? MonomialOrder::block(k) : MonomialOrder::block(k, weights));
  std::vector<Polynomial> keep;
  for (auto& p : b.polys()) {
    bool free = true;
    for (auto& t : p.terms()) {
      for (int i = 0; i < k && free; ++i)
        if (t.m[i]) free = false;
      if (!free) break;
    }
    if (free) keep.push_back(poly::change_ring(p, sub, idx));
  }
  return Ideal(sub, std::move(keep));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!poly::same_ring(I.ring(), J.ring())) throw std::invalid_argument("intersect: ring mismatch");
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  RingPtr ext = I.ring()->prepend({fresh_name(I.ring(), "aux")});
  Polynomial t = Polynomial::var(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> g;
  for (auto& f : I.gens()) g.push_back(t * poly::embed(f, ext));
  for (auto& f : J.gens()) g.push_back(one_minus_t * poly::embed(f, ext));
  return embed(eliminate(Ideal(ext, std::move(g)), 1), I.ring());
}

Ideal intersect_all(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect_all: empty list");
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
  if (g.is_zero() || I.contains(g)) return Ideal::unit(I.ring());
  Ideal K = intersect(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> q;
  for (auto& f : K.basis().polys()) {
    auto d = poly::divide_exact(f, g);
    if (!d) throw std::logic_error("quotient: intersection element not divisible");
    q.push_back(*d);
  }
  return Ideal(I.ring(), std::move(q));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  std::vector<Ideal> parts;
  for (auto& g : J.gens()) parts.push_back(quotient(I, g));
  if (parts.empty()) return Ideal::unit(I.ring());
  return intersect_all(parts);
}

Ideal saturate(const Ideal& I, const Polynomial& g, SatMethod method) {
  if (g.is_zero()) return Ideal::unit(I.ring());
  if (method == SatMethod::Rabinowitsch) {
    RingPtr ext = I.ring()->prepend({fresh_name(I.ring(), "aux")});
    std::vector<Polynomial> gens;
    for (auto& f : I.gens()) gens.push_back(poly::embed(f, ext));
    gens.push_back(Polynomial::constant(ext, 1) - Polynomial::var(ext, 0) * poly::embed(g, ext));
    return embed(eliminate(Ideal(ext, std::move(gens)), 1), I.ring());
  }
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, g);
    if (cur.contains(next)) return cur.trimmed();
    cur = next;
  }
}

Ideal saturate(const Ideal& I, const Ideal& J, SatMethod method) {
  std::vector<Ideal> parts;
  for (auto& g : J.gens()) parts.push_back(saturate(I, g, method));
  if (parts.empty()) return Ideal::unit(I.ring());
  return intersect_all(parts);
}

Ideal saturate_by_variable(const Ideal& I, int var) {
  if (!I.is_homogeneous()) return saturate(I, Polynomial::var(I.ring(), var));
  const int n = I.nvars();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    if (i != var) names.push_back(I.ring()->name(i));
  names.push_back(I.ring()->name(var));
  RingPtr perm = Ring::make(names);
  Ideal J = embed(I, perm);
  std::vector<Polynomial> out;
  for (auto& p : J.basis().polys()) {
    int e = p.content_monomial()[n - 1];
    if (e == 0) {
      out.push_back(p);
      continue;
    }
    poly::Monomial m = poly::Monomial::var(n - 1, e);
    std::vector<Term> t;
    for (auto& x : p.terms()) t.push_back({x.m / m, x.c});
    out.push_back(Polynomial::from_terms(perm, std::move(t)));
  }
  return embed(Ideal(perm, std::move(out)), I.ring());
}

Ideal saturate_irrelevant(const Ideal& I) {
  std::vector<Ideal> parts;
  for (int i = 0; i < I.nvars(); ++i) parts.push_back(saturate_by_variable(I, i));
  return intersect_all(parts);
}

}  // namespace efv::gb
