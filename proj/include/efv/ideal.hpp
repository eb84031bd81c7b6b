#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "efv/groebner.hpp"

namespace efv::gb {

// Generators in a named ring with a per-order cache of reduced bases. The
// cache is shared between copies; concurrent callers may compute the same
// basis twice, and the first stored result wins.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring);
  // Ideal generated by the given variables.
  static Ideal vars(const RingPtr& ring, const std::vector<int>& which);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  int nvars() const { return ring_->nvars(); }

  const GroebnerBasis& basis(const MonomialOrder& ord = MonomialOrder::grevlex()) const;
  // Ideal generated by the reduced grevlex basis.
  Ideal trimmed() const;

  bool is_unit() const { return basis().is_unit(); }
  bool is_zero() const;
  bool is_homogeneous() const;
  Polynomial normal_form(const Polynomial& f) const { return basis().normal_form(f); }
  bool contains(const Polynomial& f) const { return basis().contains(f); }
  // J is a subset of this ideal.
  bool contains(const Ideal& J) const;
  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  Ideal operator+(const Polynomial& f) const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Moves an ideal to another ring by variable names.
Ideal embed(const Ideal& I, const RingPtr& target);

// I intersected with the subring of the variables after the first k. The
// result lives in the ring of the remaining variables.
Ideal eliminate(const Ideal& I, int k);
// Same, with a weighted block order; I should be homogeneous for the weights.
Ideal eliminate(const Ideal& I, int k, const std::vector<int>& weights);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect_all(const std::vector<Ideal>& ideals);
Ideal quotient(const Ideal& I, const Polynomial& g);
Ideal quotient(const Ideal& I, const Ideal& J);

enum class SatMethod { IterateQuotient, Rabinowitsch };
Ideal saturate(const Ideal& I, const Polynomial& g, SatMethod method = SatMethod::IterateQuotient);
Ideal saturate(const Ideal& I, const Ideal& J, SatMethod method = SatMethod::IterateQuotient);
// I : x_var^infinity for homogeneous I, via a grevlex basis with x_var last.
Ideal saturate_by_variable(const Ideal& I, int var);
// Saturation by the irrelevant ideal of a homogeneous ideal.
Ideal saturate_irrelevant(const Ideal& I);

}  // namespace efv::gb
