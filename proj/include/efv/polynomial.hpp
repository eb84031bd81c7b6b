#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "efv/field.hpp"
#include "efv/monomial.hpp"
#include "efv/order.hpp"

namespace efv::poly {

using gf::u32;
using gf::u64;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ordered list of variable names such as s_0..s_3. Variables are positional.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names);
  static RingPtr indexed(const std::string& base, int n);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  // New ring with `extra` placed before (or after) the existing variables.
  RingPtr prepend(const std::vector<std::string>& extra) const;
  RingPtr append(const std::vector<std::string>& extra) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

  explicit Ring(std::vector<std::string> names);

 private:
  std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial m;
  u32 c;
};

// Sparse polynomial with terms strictly descending in grevlex and no zero
// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

  static Polynomial constant(RingPtr r, u32 c);
  static Polynomial var(RingPtr r, int i);
  static Polynomial term(RingPtr r, const Monomial& m, u32 c);
  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr r, std::vector<Term> terms);
  // Terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted(RingPtr r, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_ ? ring_->nvars() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg() == 0); }
  std::size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg(); }
  int low_degree() const;
  bool is_homogeneous() const;
  const Term& lead() const { return terms_.front(); }
  Term lead(const MonomialOrder& ord) const;
  u32 coeff(const Monomial& m) const;
  // Largest monomial dividing every term.
  Monomial content_monomial() const;
  // Terms of total degree d.
  Polynomial homogeneous_part(int d) const;

  Polynomial monic() const;
  Polynomial scaled(u32 c) const;
  Polynomial times(const Monomial& m, u32 c) const;
  Polynomial pow(unsigned e) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline bool grevlex_greater(const Monomial& a, const Monomial& b, int n) {
  if (a.deg() != b.deg()) return a.deg() > b.deg();
  for (int i = n - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial derivative(const Polynomial& f, int var);
// images[i] replaces variable i; all images share one target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);
// Replaces only the listed variables; the result stays in f's ring.
Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& images);
// Moves f into `target`, sending variable i to target variable index_map[i].
Polynomial change_ring(const Polynomial& f, const RingPtr& target, const std::vector<int>& index_map);
// Embeds f into a ring whose variable names include all of f's.
Polynomial embed(const Polynomial& f, const RingPtr& target);
Polynomial homogenize(const Polynomial& f, int var);
Polynomial dehomogenize(const Polynomial& f, int var);
u32 evaluate(const Polynomial& f, const std::vector<u32>& point);
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// All monomials of degree d in n variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);
Polynomial random_form(const RingPtr& r, int degree, gf::Rng& rng);
// Random linear combination of the given forms.
Polynomial random_combination(const std::vector<Polynomial>& forms, gf::Rng& rng);
// Linear change of coordinates: variable i -> sum_j m[i][j] * x_j.
Polynomial linear_change(const Polynomial& f, const std::vector<std::vector<u32>>& m);

}  // namespace efv::poly
