#pragma once

#include <cstdint>
#include <vector>

#include "efv/ideal.hpp"

namespace efv::gb {

// Basis of the degree-d part of a homogeneous ideal: m - NF(m) for every
// degree-d monomial m in the leading-term ideal.
std::vector<Polynomial> graded_piece(const Ideal& I, int d);

// f together with every partial derivative of order below m lies in Z.
struct Condition {
  Ideal locus;
  int multiplicity = 1;
};

// Basis of the degree-d forms satisfying every condition. The basis is in
// reduced echelon form with respect to the grevlex-descending monomials.
std::vector<Polynomial> linear_system(const RingPtr& ring, const std::vector<Condition>& conditions, int d);

bool vanishes_to_order(const Polynomial& f, const Ideal& Z, int m);

struct DecompositionCheck {
  std::vector<bool> contained;  // I is a subset of component k
  bool all_contained = false;
  Ideal residual;               // I saturated by the intersection of the components
  int residual_projective_dim = -1;
  std::int64_t residual_degree = 0;
};

DecompositionCheck verify_decomposition(const Ideal& I, const std::vector<Ideal>& components);

}  // namespace efv::gb
