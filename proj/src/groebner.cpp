#include "efv/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "gb_internal.hpp"

namespace efv::gb {

using namespace efv::gf;
using detail::BasisView;
using detail::Chain;
using detail::Cmp;

GbOptions& default_options() {
  static GbOptions opts;
  return opts;
}

std::vector<Term> sort_terms(const Polynomial& f, const MonomialOrder& ord) {
  std::vector<Term> t = f.terms();
  if (ord.kind() == poly::OrderKind::Grevlex) return t;
  Cmp cmp{&ord, f.nvars()};
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return cmp.greater(a.m, b.m); });
  return t;
}

Polynomial from_sorted_terms(const RingPtr& r, const std::vector<Term>& t) {
  return Polynomial::from_terms(r, t);
}

namespace detail {

int BasisView::find(const Monomial& m) const {
  std::uint32_t mm = m.support_mask(n);
  for (std::size_t k = 0; k < leads.size(); ++k) {
    if (!usable[k]) continue;
    if ((masks[k] & ~mm) != 0) continue;
    if (leads[k].divides(m)) return static_cast<int>(k);
  }
  return -1;
}

void BasisView::add(const std::vector<Term>* p) {
  polys.push_back(p);
  leads.push_back(p->front().m);
  masks.push_back(p->front().m.support_mask(n));
  usable.push_back(1);
}

std::vector<Term> reduce(std::vector<Chain> chains, const BasisView& basis, const Cmp& cmp, bool full) {
  struct Entry {
    Monomial m;
    std::uint32_t chain;
  };
  std::vector<Entry> heap;
  auto less = [&](const Entry& a, const Entry& b) { return cmp.greater(b.m, a.m); };
  auto push = [&](std::uint32_t k) {
    Chain& c = chains[k];
    heap.push_back({c.cur->m * c.mult, k});
    std::push_heap(heap.begin(), heap.end(), less);
  };
  for (std::uint32_t k = 0; k < chains.size(); ++k)
    if (chains[k].cur != chains[k].end && chains[k].coef) push(k);

  std::vector<Term> out;
  bool reducing = true;
  while (!heap.empty()) {
    Monomial m = heap.front().m;
    u64 acc = 0;
    int cnt = 0;
    while (!heap.empty() && heap.front().m == m) {
      std::pop_heap(heap.begin(), heap.end(), less);
      std::uint32_t k = heap.back().chain;
      heap.pop_back();
      Chain& c = chains[k];
      acc += static_cast<u64>(c.coef) * c.cur->c;
      if (++cnt == 60000) {
        acc = gf::reduce(acc);
        cnt = 0;
      }
      ++c.cur;
      if (c.cur != c.end) push(k);
    }
    u32 a = gf::reduce(acc);
    if (!a) continue;
    int d = reducing ? basis.find(m) : -1;
    if (d >= 0) {
      const std::vector<Term>& g = *basis.polys[static_cast<std::size_t>(d)];
      if (g.size() > 1) {
        // Basis elements are monic, so -a * (m / lm) * g cancels this term.
        chains.push_back({g.data() + 1, g.data() + g.size(), m / g.front().m, neg(a)});
        push(static_cast<std::uint32_t>(chains.size() - 1));
      }
    } else {
      out.push_back({m, a});
      if (!full) reducing = false;
    }
  }
  return out;
}

void make_monic(std::vector<Term>& t) {
  if (t.empty() || t.front().c == 1) return;
  u32 s = inv(t.front().c);
  for (auto& x : t) x.c = mul(x.c, s);
}

std::vector<std::vector<Term>> finalize(const std::vector<std::vector<Term>>& raw, const Cmp& cmp, int n) {
  std::vector<std::size_t> idx(raw.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return cmp.greater(raw[b].front().m, raw[a].front().m); });
  std::vector<std::size_t> keep;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (std::size_t j : keep)
      if (raw[j].front().m.divides(raw[i].front().m)) {
        redundant = true;
        break;
      }
    if (!redundant) keep.push_back(i);
  }
  BasisView view(n);
  for (std::size_t j : keep) view.add(&raw[j]);
  std::vector<std::vector<Term>> out;
  out.reserve(keep.size());
  for (std::size_t j : keep) {
    const std::vector<Term>& g = raw[j];
    std::vector<Term> tail;
    if (g.size() > 1) {
      std::vector<Chain> ch{{g.data() + 1, g.data() + g.size(), Monomial(), 1}};
      tail = reduce(std::move(ch), view, cmp, true);
    }
    std::vector<Term> r;
    r.reserve(tail.size() + 1);
    r.push_back(g.front());
    r.insert(r.end(), tail.begin(), tail.end());
    make_monic(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<std::vector<Term>> sorted)
    : ring_(std::move(ring)), order_(std::move(ord)), sorted_(std::move(sorted)) {
  const int n = ring_->nvars();
  for (auto& t : sorted_) {
    polys_.push_back(Polynomial::from_terms(ring_, t));
    leads_.push_back(t.front().m);
    masks_.push_back(t.front().m.support_mask(n));
  }
}

int GroebnerBasis::find_divisor(const Monomial& m) const {
  std::uint32_t mm = m.support_mask(ring_->nvars());
  for (std::size_t k = 0; k < leads_.size(); ++k)
    if ((masks_[k] & ~mm) == 0 && leads_[k].divides(m)) return static_cast<int>(k);
  return -1;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!poly::same_ring(f.ring(), ring_)) throw std::invalid_argument("normal_form: ring mismatch");
  if (f.is_zero()) return f;
  Cmp cmp{&order_, ring_->nvars()};
  std::vector<Term> t = sort_terms(f, order_);
  detail::BasisView view(ring_->nvars());
  for (auto& g : sorted_) view.add(&g);
  std::vector<Chain> ch{{t.data(), t.data() + t.size(), Monomial(), 1}};
  return Polynomial::from_terms(ring_, detail::reduce(std::move(ch), view, cmp, true));
}

namespace detail {

bool PairTracker::pair_less(const Pair& a, const Pair& b) const {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = ord_.compare(a.lcm, b.lcm, n_);
  if (c) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

void PairTracker::check_sugar(long s) const {
  if (s > opt_.max_degree)
    throw ResourceLimit("S-pair degree " + std::to_string(s) + " exceeds cap " + std::to_string(opt_.max_degree));
}

std::vector<Pair> PairTracker::pop_lowest(bool whole_degree) {
  std::vector<Pair> out;
  if (pairs_.empty()) return out;
  if (!whole_degree) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k)
      if (pair_less(pairs_[k], pairs_[best])) best = k;
    out.push_back(pairs_[best]);
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return out;
  }
  long s = pairs_[0].sugar;
  for (auto& p : pairs_) s = std::min(s, p.sugar);
  std::vector<Pair> rest;
  for (auto& p : pairs_) (p.sugar == s ? out : rest).push_back(p);
  pairs_ = std::move(rest);
  std::sort(out.begin(), out.end(), [&](const Pair& a, const Pair& b) { return pair_less(a, b); });
  return out;
}

void PairTracker::insert(std::vector<Term> h, long sugar) {
  if (h.empty()) return;
  make_monic(h);
  if (store_.size() >= opt_.max_basis) throw ResourceLimit("basis size exceeds cap");
  const std::uint32_t hi = static_cast<std::uint32_t>(store_.size());
  store_.push_back(std::make_unique<std::vector<Term>>(std::move(h)));
  sugar_.push_back(sugar);
  active_.push_back(1);
  const Monomial lh = store_[hi]->front().m;
  const long degh = ord_.weight(lh, n_);

  std::vector<Pair> c;
  for (std::uint32_t g = 0; g < hi; ++g) {
    if (!active_[g]) continue;
    const Monomial& lg = store_[g]->front().m;
    Monomial l = Monomial::lcm(lh, lg, n_);
    long deg_l = ord_.weight(l, n_);
    long s = std::max(sugar + deg_l - degh, sugar_[g] + deg_l - ord_.weight(lg, n_));
    c.push_back({g, hi, l, s});
  }
  // Chain criterion among the new pairs; coprime pairs stay as witnesses
  // and are dropped afterwards by the product criterion.
  std::vector<char> keep_c(c.size(), 1);
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (lh.coprime(store_[c[a].i]->front().m)) continue;
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (b == a || !keep_c[b]) continue;
      if (c[b].lcm.divides(c[a].lcm) && (c[b].lcm != c[a].lcm || b < a)) {
        keep_c[a] = 0;
        break;
      }
    }
  }
  std::vector<Pair> kept;
  kept.reserve(pairs_.size() + c.size());
  for (auto& p : pairs_) {
    if (lh.divides(p.lcm)) {
      Monomial l1 = Monomial::lcm(store_[p.i]->front().m, lh, n_);
      Monomial l2 = Monomial::lcm(store_[p.j]->front().m, lh, n_);
      if (l1 != p.lcm && l2 != p.lcm) continue;
    }
    kept.push_back(p);
  }
  for (std::size_t a = 0; a < c.size(); ++a)
    if (keep_c[a] && !lh.coprime(store_[c[a].i]->front().m)) kept.push_back(c[a]);
  pairs_ = std::move(kept);
  for (std::uint32_t g = 0; g < hi; ++g)
    if (active_[g] && lh.divides(store_[g]->front().m)) active_[g] = 0;
  view_.add(store_[hi].get());
}

std::vector<std::vector<Term>> PairTracker::finish() const {
  std::vector<std::vector<Term>> raw;
  raw.reserve(store_.size());
  for (auto& p : store_) raw.push_back(*p);
  return finalize(raw, cmp_, n_);
}

}  // namespace detail

namespace {

std::vector<std::vector<Term>> buchberger(const std::vector<std::vector<Term>>& gens, int n,
                                          const MonomialOrder& ord, const GbOptions& opt, GbStats* stats) {
  detail::PairTracker tr(n, ord, opt);
  for (auto& g : gens) {
    std::vector<Chain> ch{{g.data(), g.data() + g.size(), Monomial(), 1}};
    long s = 0;
    for (auto& t : g) s = std::max(s, ord.weight(t.m, n));
    tr.insert(detail::reduce(std::move(ch), tr.view(), tr.cmp(), true), s);
  }
  std::size_t npairs = 0, nzero = 0;
  while (!tr.empty()) {
    detail::Pair p = tr.pop_lowest(false).front();
    tr.check_sugar(p.sugar);
    ++npairs;
    const auto& f = tr.poly(p.i);
    const auto& g = tr.poly(p.j);
    std::vector<Chain> ch{{f.data() + 1, f.data() + f.size(), p.lcm / f.front().m, 1},
                          {g.data() + 1, g.data() + g.size(), p.lcm / g.front().m, neg(1)}};
    auto r = detail::reduce(std::move(ch), tr.view(), tr.cmp(), true);
    if (r.empty()) {
      ++nzero;
      continue;
    }
    tr.insert(std::move(r), p.sugar);
  }
  if (stats) {
    stats->pairs = npairs;
    stats->zero_reductions = nzero;
    stats->max_basis = tr.size();
  }
  return tr.finish();
}

}  // namespace

GroebnerBasis groebner(const std::vector<Polynomial>& gens, const MonomialOrder& ord, const GbOptions& opt,
                       GbStats* stats) {
  if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
  RingPtr ring = gens[0].ring();
  std::vector<std::vector<Term>> sorted;
  for (auto& g : gens) {
    if (!poly::same_ring(g.ring(), ring)) throw std::invalid_argument("groebner: ring mismatch");
    if (!g.is_zero()) sorted.push_back(sort_terms(g, ord));
  }
  if (sorted.empty()) return GroebnerBasis(ring, ord, {});
  std::vector<std::vector<Term>> res;
  if (opt.algorithm == Algorithm::F4) {
    res = detail::f4(sorted, ring->nvars(), ord, opt, stats);
  } else {
    res = buchberger(sorted, ring->nvars(), ord, opt, stats);
  }
  return GroebnerBasis(ring, ord, std::move(res));
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& g) {
  const int n = g.ring()->nvars();
  MonomialOrder ord = g.order();
  Cmp cmp{&ord, n};
  detail::BasisView view(n);
  for (auto& p : g.sorted()) view.add(&p);
  const auto& s = g.sorted();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Monomial l = Monomial::lcm(s[i].front().m, s[j].front().m, n);
      std::vector<Chain> ch{{s[i].data() + 1, s[i].data() + s[i].size(), l / s[i].front().m, 1},
                            {s[j].data() + 1, s[j].data() + s[j].size(), l / s[j].front().m, neg(1)}};
      if (!detail::reduce(std::move(ch), view, cmp, true).empty()) return false;
    }
  return true;
}

}  // namespace efv::gb
