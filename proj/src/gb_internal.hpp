#pragma once

#include <memory>
#include <vector>

#include "efv/groebner.hpp"

namespace efv::gb::detail {

struct Cmp {
  const MonomialOrder* ord;
  int n;
  bool greater(const Monomial& a, const Monomial& b) const {
    if (ord->kind() == poly::OrderKind::Grevlex) return poly::grevlex_greater(a, b, n);
    return ord->compare(a, b, n) > 0;
  }
};

// Lazily evaluated term stream coef * mult * (*cur .. end).
struct Chain {
  const Term* cur;
  const Term* end;
  Monomial mult;
  gf::u32 coef;
};

// Reducers: monic polynomials sorted in the active order.
struct BasisView {
  explicit BasisView(int nv) : n(nv) {}
  int n;
  std::vector<const std::vector<Term>*> polys;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;
  std::vector<char> usable;
  int find(const Monomial& m) const;
  void add(const std::vector<Term>* p);
};

// Sum of the chains reduced by `basis`. With full = false only the leading
// term is reduced.
std::vector<Term> reduce(std::vector<Chain> chains, const BasisView& basis, const Cmp& cmp, bool full);
void make_monic(std::vector<Term>& t);
// Minimal, tail-reduced, monic, ascending by leading monomial.
std::vector<std::vector<Term>> finalize(const std::vector<std::vector<Term>>& raw, const Cmp& cmp, int n);

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  long sugar;
};

// Basis under construction plus the critical-pair set, maintained with the
// Gebauer-Moeller criteria.
class PairTracker {
 public:
  PairTracker(int n, const MonomialOrder& ord, const GbOptions& opt)
      : n_(n), ord_(ord), cmp_{&ord_, n}, opt_(opt), view_(n) {}

  void insert(std::vector<Term> h, long sugar);
  bool empty() const { return pairs_.empty(); }
  // Removes and returns the pairs of smallest sugar, sorted deterministically.
  std::vector<Pair> pop_lowest(bool whole_degree);
  const std::vector<Term>& poly(std::uint32_t k) const { return *store_[k]; }
  const BasisView& view() const { return view_; }
  const Cmp& cmp() const { return cmp_; }
  const MonomialOrder& order() const { return ord_; }
  std::size_t size() const { return store_.size(); }
  std::vector<std::vector<Term>> finish() const;
  void check_sugar(long s) const;

 private:
  bool pair_less(const Pair& a, const Pair& b) const;
  int n_;
  MonomialOrder ord_;
  Cmp cmp_;
  GbOptions opt_;
  BasisView view_;
  std::vector<std::unique_ptr<std::vector<Term>>> store_;
  std::vector<long> sugar_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
};

std::vector<std::vector<Term>> f4(const std::vector<std::vector<Term>>& gens, int n, const MonomialOrder& ord,
                                  const GbOptions& opt, GbStats* stats);

}  // namespace efv::gb::detail
