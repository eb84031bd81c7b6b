#pragma once

#include <cstddef>
#include <vector>

#include "efv/polynomial.hpp"

namespace efv::gb {

using poly::Monomial;
using poly::MonomialOrder;
using poly::Polynomial;
using poly::ResourceLimit;
using poly::RingPtr;
using poly::Term;

enum class Algorithm { Buchberger, F4 };

struct GbOptions {
  Algorithm algorithm = Algorithm::F4;
  int max_degree = 100;          // largest admissible S-pair sugar
  std::size_t max_basis = 50000;  // largest admissible intermediate basis
};

// Process-wide defaults, adjustable from the command line.
GbOptions& default_options();

struct GbStats {
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis = 0;
};

// Reduced Groebner basis for a fixed order. Elements are monic and sorted by
// ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<std::vector<Term>> sorted);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return sorted_.size(); }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const std::vector<std::vector<Term>>& sorted() const { return sorted_; }
  const std::vector<Monomial>& leads() const { return leads_; }
  bool is_unit() const { return sorted_.size() == 1 && leads_[0].deg() == 0; }

  // Fully reduced normal form.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  // Index of the first element whose leading monomial divides m, or -1.
  int find_divisor(const Monomial& m) const;

 private:
  RingPtr ring_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<std::vector<Term>> sorted_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> leads_;
  std::vector<std::uint32_t> masks_;
};

GroebnerBasis groebner(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                       const GbOptions& opt = default_options(), GbStats* stats = nullptr);

// Every S-polynomial of the basis reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& g);

// Terms of f sorted descending in `ord`.
std::vector<Term> sort_terms(const Polynomial& f, const MonomialOrder& ord);
Polynomial from_sorted_terms(const RingPtr& r, const std::vector<Term>& t);

}  // namespace efv::gb
