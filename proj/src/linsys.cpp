#include "efv/linsys.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "efv/hilbert.hpp"
#include "efv/linalg.hpp"

namespace efv::gb {

using namespace efv::gf;

std::vector<Polynomial> graded_piece(const Ideal& I, int d) {
  if (!I.is_homogeneous()) throw std::invalid_argument("graded_piece: ideal is not homogeneous");
  std::vector<Polynomial> out;
  if (d < 0) return out;
  const GroebnerBasis& b = I.basis();
  for (auto& m : poly::monomials_of_degree(I.nvars(), d)) {
    if (b.find_divisor(m) < 0) continue;
    Polynomial x = Polynomial::term(I.ring(), m, 1);
    out.push_back(x - b.normal_form(x));
  }
  return out;
}

namespace {

// All partial derivatives of f of order exactly k.
std::vector<Polynomial> partials(const Polynomial& f, int k) {
  std::vector<Polynomial> cur{f};
  const int n = f.nvars();
  // Non-decreasing variable sequences avoid duplicates.
  std::vector<int> last{0};
  for (int step = 0; step < k; ++step) {
    std::vector<Polynomial> nx;
    std::vector<int> nl;
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (int i = last[a]; i < n; ++i) {
        nx.push_back(poly::derivative(cur[a], i));
        nl.push_back(i);
      }
    cur = std::move(nx);
    last = std::move(nl);
  }
  return cur;
}

}  // namespace

std::vector<Polynomial> linear_system(const RingPtr& ring, const std::vector<Condition>& conditions, int d) {
  auto monos = poly::monomials_of_degree(ring->nvars(), d);
  const std::size_t N = monos.size();
  // Row key: (condition, derivative index, standard monomial).
  u32 nrows = 0;
  std::vector<std::map<std::pair<std::size_t, u32>, u32>> rowid(conditions.size());
  std::vector<SparseRow> cols(N);
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    const auto& cond = conditions[c];
    if (cond.multiplicity < 1) throw std::invalid_argument("linear_system: multiplicity must be positive");
    if (!poly::same_ring(cond.locus.ring(), ring)) throw std::invalid_argument("linear_system: ring mismatch");
    const GroebnerBasis& b = cond.locus.basis();
    std::unordered_map<poly::Monomial, u32, poly::MonomialHash> std_index;
    for (std::size_t j = 0; j < N; ++j) {
      Polynomial x = Polynomial::term(ring, monos[j], 1);
      std::vector<Polynomial> tests;
      for (int k = 0; k < cond.multiplicity; ++k) {
        auto p = partials(x, k);
        tests.insert(tests.end(), p.begin(), p.end());
      }
      for (std::size_t t = 0; t < tests.size(); ++t) {
        Polynomial r = b.normal_form(tests[t]);
        for (auto& term : r.terms()) {
          auto [it, fresh] = std_index.emplace(term.m, static_cast<u32>(std_index.size()));
          auto key = std::make_pair(t, it->second);
          auto [rit, rf] = rowid[c].emplace(key, nrows);
          if (rf) ++nrows;
          cols[j].emplace_back(rit->second, term.c);
        }
      }
    }
  }
  DenseMatrix m(nrows, N);
  for (std::size_t j = 0; j < N; ++j)
    for (auto& [r, v] : cols[j]) m.at(r, j) = add(m.at(r, j), v);
  RrefResult res = rref(m);
  std::vector<Polynomial> out;
  for (auto& v : res.kernel) {
    std::vector<Term> t;
    for (std::size_t j = 0; j < N; ++j)
      if (v[j]) t.push_back({monos[j], v[j]});
    out.push_back(Polynomial::from_sorted(ring, std::move(t)));
  }
  return out;
}

bool vanishes_to_order(const Polynomial& f, const Ideal& Z, int m) {
  const GroebnerBasis& b = Z.basis();
  for (int k = 0; k < m; ++k)
    for (auto& p : partials(f, k))
      if (!b.contains(p)) return false;
  return true;
}

DecompositionCheck verify_decomposition(const Ideal& I, const std::vector<Ideal>& components) {
  DecompositionCheck r;
  r.all_contained = true;
  for (auto& K : components) {
    bool c = K.contains(I);
    r.contained.push_back(c);
    r.all_contained = r.all_contained && c;
  }
  r.residual = components.empty() ? I : saturate(I, intersect_all(components));
  if (r.residual.is_homogeneous()) {
    HilbertData h = hilbert(r.residual);
    r.residual_projective_dim = h.projective_dim;
    r.residual_degree = h.degree;
  }
  return r;
}

}  // namespace efv::gb
