// Batch reduction of S-pairs by simultaneous sparse row reduction.

#include <algorithm>
#include <unordered_map>

#include "efv/linalg.hpp"
#include "gb_internal.hpp"

namespace efv::gb::detail {

using namespace efv::gf;

namespace {

struct RowSpec {
  std::uint32_t poly;
  Monomial mult;
};

struct Matrix {
  std::vector<Monomial> cols;                  // descending
  std::vector<std::vector<std::pair<std::uint32_t, u32>>> pivot_rows;
  std::vector<std::ptrdiff_t> pivot_of;        // column -> pivot row
  std::vector<std::vector<std::pair<std::uint32_t, u32>>> todo;
};

std::vector<std::pair<std::uint32_t, u32>> to_row(
    const std::vector<Term>& p, const Monomial& mult,
    const std::unordered_map<Monomial, std::uint32_t, poly::MonomialHash>& col) {
  std::vector<std::pair<std::uint32_t, u32>> r;
  r.reserve(p.size());
  for (auto& t : p) r.emplace_back(col.at(t.m * mult), t.c);
  return r;
}

std::vector<std::pair<std::uint32_t, u32>> reduce_row(const std::vector<std::pair<std::uint32_t, u32>>& row,
                                                      const Matrix& m, std::vector<u32>& buf) {
  std::vector<std::pair<std::uint32_t, u32>> out;
  if (row.empty()) return out;
  const std::size_t ncols = m.cols.size();
  for (auto& [c, v] : row) buf[c] = v;
  for (std::size_t c = row.front().first; c < ncols; ++c) {
    u32 v = buf[c];
    if (!v) continue;
    buf[c] = 0;
    std::ptrdiff_t p = m.pivot_of[c];
    if (p >= 0) {
      u32 nf = neg(v);
      const auto& pr = m.pivot_rows[static_cast<std::size_t>(p)];
      for (std::size_t k = 1; k < pr.size(); ++k) buf[pr[k].first] = add(buf[pr[k].first], mul(nf, pr[k].second));
    } else {
      out.emplace_back(static_cast<std::uint32_t>(c), v);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Term>> f4(const std::vector<std::vector<Term>>& gens, int n, const MonomialOrder& ord,
                                  const GbOptions& opt, GbStats* stats) {
  PairTracker tr(n, ord, opt);
  for (auto& g : gens) {
    std::vector<Chain> ch{{g.data(), g.data() + g.size(), Monomial(), 1}};
    long s = 0;
    for (auto& t : g) s = std::max(s, ord.weight(t.m, n));
    tr.insert(reduce(std::move(ch), tr.view(), tr.cmp(), true), s);
  }
  const Cmp& cmp = tr.cmp();
  std::size_t npairs = 0, nzero = 0;
  while (!tr.empty()) {
    std::vector<Pair> batch = tr.pop_lowest(true);
    const long sugar = batch.front().sugar;
    tr.check_sugar(sugar);
    npairs += batch.size();

    // Rows: both halves of every pair, deduplicated.
    std::vector<RowSpec> upper, lower;
    std::unordered_map<Monomial, std::uint32_t, poly::MonomialHash> seen_lead;
    std::vector<Monomial> queue;
    std::unordered_map<Monomial, std::uint32_t, poly::MonomialHash> col;
    auto note = [&](const std::vector<Term>& p, const Monomial& mult) {
      for (auto& t : p) {
        Monomial x = t.m * mult;
        if (col.emplace(x, 0).second) queue.push_back(x);
      }
    };
    std::vector<std::pair<std::uint32_t, Monomial>> specs;
    for (auto& p : batch) {
      specs.emplace_back(p.i, p.lcm / tr.poly(p.i).front().m);
      specs.emplace_back(p.j, p.lcm / tr.poly(p.j).front().m);
    }
    std::sort(specs.begin(), specs.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return cmp.greater(b.second, a.second);
    });
    specs.erase(std::unique(specs.begin(), specs.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; }),
                specs.end());
    for (auto& [pi, mult] : specs) {
      Monomial lead = tr.poly(pi).front().m * mult;
      if (seen_lead.emplace(lead, 1).second)
        upper.push_back({pi, mult});
      else
        lower.push_back({pi, mult});
      note(tr.poly(pi), mult);
    }
    // Symbolic preprocessing: one reducer for every reducible monomial that
    // is not already a leading monomial.
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Monomial x = queue[q];
      if (seen_lead.count(x)) continue;
      int d = tr.view().find(x);
      if (d < 0) continue;
      const auto& g = tr.poly(static_cast<std::uint32_t>(d));
      Monomial mult = x / g.front().m;
      seen_lead.emplace(x, 1);
      upper.push_back({static_cast<std::uint32_t>(d), mult});
      note(g, mult);
    }
    Matrix m;
    m.cols = queue;
    std::sort(m.cols.begin(), m.cols.end(), [&](const Monomial& a, const Monomial& b) { return cmp.greater(a, b); });
    for (std::uint32_t k = 0; k < m.cols.size(); ++k) col[m.cols[k]] = k;
    m.pivot_of.assign(m.cols.size(), -1);
    for (auto& r : upper) {
      auto row = to_row(tr.poly(r.poly), r.mult, col);
      m.pivot_of[row.front().first] = static_cast<std::ptrdiff_t>(m.pivot_rows.size());
      m.pivot_rows.push_back(std::move(row));
    }
    for (auto& r : lower) m.todo.push_back(to_row(tr.poly(r.poly), r.mult, col));

    // Rows reduce independently, so the result does not depend on the
    // thread count.
    std::vector<std::vector<std::pair<std::uint32_t, u32>>> reduced(m.todo.size());
    const std::ptrdiff_t nt = static_cast<std::ptrdiff_t>(m.todo.size());
#pragma omp parallel num_threads(thread_cap()) if (nt > 8)
    {
      std::vector<u32> buf(m.cols.size(), 0);
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t k = 0; k < nt; ++k)
        reduced[static_cast<std::size_t>(k)] = reduce_row(m.todo[static_cast<std::size_t>(k)], m, buf);
    }
    std::vector<SparseRow> rest;
    for (auto& r : reduced)
      if (!r.empty()) rest.push_back(std::move(r));
    std::size_t produced = 0;
    if (!rest.empty()) {
      auto ech = sparse_rref(std::move(rest), m.cols.size(), nullptr);
      // Insert in ascending leading-monomial order.
      for (auto it = ech.rbegin(); it != ech.rend(); ++it) {
        std::vector<Term> t;
        t.reserve(it->size());
        for (auto& [c, v] : *it) t.push_back({m.cols[c], v});
        tr.insert(std::move(t), sugar);
        ++produced;
      }
    }
    nzero += m.todo.size() - produced;
  }
  if (stats) {
    stats->pairs = npairs;
    stats->zero_reductions = nzero;
    stats->max_basis = tr.size();
  }
  return tr.finish();
}

}  // namespace efv::gb::detail
