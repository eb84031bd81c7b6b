#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efv/hilbert.hpp"
#include "efv/linsys.hpp"

namespace efv::geom {

using gb::Ideal;
using gf::u32;
using poly::Polynomial;
using poly::RingPtr;

// Point of projective space, normalized so that the first nonzero
// coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  explicit ProjectivePoint(std::vector<u32> coords);
  static ProjectivePoint from_ints(const std::vector<std::int64_t>& coords);
  static ProjectivePoint coordinate(int n, int i);

  const std::vector<u32>& coords() const { return c_; }
  int dim() const { return static_cast<int>(c_.size()) - 1; }
  int pivot() const;
  // Ideal of the point: n linear forms x_j - c_j x_pivot.
  Ideal ideal(const RingPtr& ring) const;
  // Signed representatives, e.g. [1:0:-2:4].
  std::string str() const;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<u32> c_;
};

// Point defined by an ideal whose degree-1 piece has codimension one, or
// nothing when the linear forms cut out more than a point.
std::optional<ProjectivePoint> point_of(const Ideal& Z);

class RationalMap {
 public:
  RationalMap() = default;
  // Forms share the source ring and one degree; at least one is nonzero.
  RationalMap(RingPtr source, RingPtr target, std::vector<Polynomial> forms,
              std::optional<Ideal> source_ideal = std::nullopt);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Polynomial>& forms() const { return forms_; }
  const std::optional<Ideal>& source_ideal() const { return source_ideal_; }
  int degree() const { return degree_; }
  Ideal base_locus() const;
  RationalMap restricted(const Ideal& Z) const;
  // Value at a point outside the base locus.
  ProjectivePoint operator()(const ProjectivePoint& p) const;

 private:
  RingPtr source_, target_;
  std::vector<Polynomial> forms_;
  std::optional<Ideal> source_ideal_;
  int degree_ = 0;
};

enum class ImageMode { Elimination, Degreewise };

struct ImageOptions {
  ImageMode mode = ImageMode::Elimination;
  // Degreewise only. When an expected projective (dim, degree) is given,
  // stabilization also requires the accumulated ideal to match it.
  int max_degree = 5;
  int expected_dim = -1;
  std::int64_t expected_degree = 0;
};

struct ImageResult {
  Ideal ideal;
  ImageMode mode = ImageMode::Elimination;
  // Elimination results are exact. Degreewise results are exact up to
  // `last_degree` and otherwise rest on Hilbert polynomial stabilization.
  bool exact = false;
  bool stabilized = false;
  int last_degree = 0;
  std::vector<std::int64_t> image_hf;  // dimension of the image's degree-e piece, e = 0..last_degree
  std::string label() const;
};

ImageResult image(const RationalMap& m, const ImageOptions& opt = {});
// Closure of the image of V(Z) outside the base locus. Throws
// std::domain_error when V(Z) lies in the base locus.
ImageResult apply_to_subvariety(const RationalMap& m, const Ideal& Z, const ImageOptions& opt = {});
// Single image point of V(Z) when the map contracts it, from the normal
// forms of the map's forms modulo Z; nothing when the forms are not
// proportional modulo Z.
std::optional<ProjectivePoint> contracted_image(const RationalMap& m, const Ideal& Z);
// Image of the exceptional divisor over P when the lowest-order parts of
// the forms at P are proportional; nothing otherwise.
std::optional<ProjectivePoint> exceptional_image(const RationalMap& m, const ProjectivePoint& P);

Ideal pullback(const RationalMap& m, const Ideal& J);
RationalMap compose(const RationalMap& first, const RationalMap& second);
// Linear projection given by the reduced basis of the degree-1 piece of a
// linear ideal, listed by ascending leading term, into a fresh ring with the
// given variable base name.
RationalMap linear_projection(const Ideal& linear, const std::string& target_base);

Ideal linear_span(const Ideal& Z);
Ideal line_through(const ProjectivePoint& p, const ProjectivePoint& q, const RingPtr& ring);
// V(L) lies in V(W), tested as I(W) contained in I(L).
bool lies_on(const Ideal& L, const Ideal& W);

struct TangentCone {
  Ideal cone;  // homogeneous, in the variables other than P's pivot
  std::int64_t multiplicity = 0;
  int projective_dim = -1;
};
TangentCone tangent_cone(const Ideal& I, const ProjectivePoint& P);
// Lowest-order part of f at P, in the coordinates of the tangent cone ring.
// For f vanishing at P, a linear result is the tangent plane at P.
Polynomial initial_form(const Polynomial& f, const ProjectivePoint& P);

// I plus the c x c minors of the Jacobian, c the codimension (computed when
// not given). Minors are expanded directly, so c is limited to 3.
Ideal singular_locus(const Ideal& I, int codim = -1);

// Matrix whose first column is p and whose other columns are unit
// vectors; variable i of the result maps to sum_j a[i][j] y_j.
std::vector<std::vector<u32>> moving_frame(const ProjectivePoint& p);

}  // namespace efv::geom
