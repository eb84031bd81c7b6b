#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "efv/ideal.hpp"

namespace efv::gb {

struct Rational {
  std::int64_t num = 0, den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const;
};

// Hilbert series N(t)/(1-t)^n of R/I, with the (1-t) factors cancelled.
struct HilbertData {
  int nvars = 0;
  std::vector<std::int64_t> numerator;          // N(t), ascending powers
  std::vector<std::int64_t> reduced_numerator;  // Q(t) = N(t)/(1-t)^(n-d)
  int affine_dim = 0;                           // d; 0 for the unit ideal
  int projective_dim = -1;                      // d - 1
  std::int64_t degree = 0;                      // Q(1)
  std::vector<Rational> hilbert_polynomial;     // ascending powers of e

  bool empty() const { return projective_dim < 0; }
  std::int64_t hilbert_function(int e) const;
  Rational polynomial_at(std::int64_t e) const;
  // 1 - P(0); defined only for curves.
  std::int64_t curve_genus() const;
};

HilbertData hilbert_from_monomials(const std::vector<poly::Monomial>& gens, int n);
// Throws std::invalid_argument for non-homogeneous input.
HilbertData hilbert(const Ideal& I);

}  // namespace efv::gb
