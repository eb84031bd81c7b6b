#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace efv::chow {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IntersectionModel;

// Integer combination of basis divisors of one model.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(const IntersectionModel* model);

  const IntersectionModel* model() const { return model_; }
  std::int64_t coeff(const std::string& name) const;
  std::int64_t coeff(std::size_t i) const { return c_[i]; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  // Nonzero coefficients by basis name.
  std::map<std::string, std::int64_t> terms() const;
  void add(std::size_t i, std::int64_t c) { c_[i] += c; }
  bool is_zero() const;
  std::string str() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t k, DivisorClass a);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.model_ == b.model_ && a.c_ == b.c_; }

 private:
  const IntersectionModel* model_ = nullptr;
  std::vector<std::int64_t> c_;
};

// Check stated in a model file, e.g. `expect triple S S S = 24`.
struct Expectation {
  enum class Kind { Triple, Genus, Contraction };
  Kind kind = Kind::Triple;
  std::vector<std::string> args;
  std::string expected;
  int line = 0;
  std::string text() const;
};

class IntersectionModel {
 public:
  explicit IntersectionModel(std::vector<std::string> basis);
  static std::shared_ptr<IntersectionModel> parse(const std::string& text, const std::string& source = "<model>");
  static std::shared_ptr<IntersectionModel> load(const std::string& path);

  const std::string& title() const { return title_; }
  const std::vector<std::string>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  int index_of(const std::string& name) const;

  // Symmetric entry; a second value for the same unordered key must agree.
  void set_triple(const std::string& a, const std::string& b, const std::string& c, std::int64_t v);
  // Triples containing both classes vanish; conflicts with nonzero entries.
  void set_disjoint(const std::string& a, const std::string& b);
  bool disjoint(std::size_t i, std::size_t j) const;
  std::int64_t value(std::size_t i, std::size_t j, std::size_t k) const;
  bool listed(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t listed_count() const { return table_.size(); }

  DivisorClass basis_class(const std::string& name) const;
  void define(const std::string& name, DivisorClass c);
  // Basis name or defined class.
  DivisorClass operator[](const std::string& name) const;
  bool has_class(const std::string& name) const { return classes_.count(name) > 0; }
  const std::vector<std::string>& class_names() const { return class_order_; }
  // Sum of integer multiples of known names, e.g. "6 H - 3 E0 - F01".
  DivisorClass parse_class(const std::string& expr) const;

  const std::vector<Expectation>& expectations() const { return expects_; }

 private:
  std::uint64_t key(std::size_t i, std::size_t j, std::size_t k) const;

  std::string title_;
  std::vector<std::string> basis_;
  std::unordered_map<std::string, int> index_;
  std::unordered_map<std::uint64_t, std::int64_t> table_;
  std::vector<std::vector<bool>> disjoint_;
  std::map<std::string, DivisorClass> classes_;
  std::vector<std::string> class_order_;
  std::vector<Expectation> expects_;
};

std::int64_t triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c);
// S^3 / 2 + 1; std::domain_error when S^3 is odd.
std::int64_t genus(const DivisorClass& s);

enum class Contraction { ToPoint, ToCurve, NotContracted };
std::string to_string(Contraction c);
Contraction contraction_from_string(const std::string& s);
Contraction contraction_type(const DivisorClass& s, const DivisorClass& d);

struct ExpectationResult {
  Expectation expectation;
  std::string actual;
  bool ok = false;
};
std::vector<ExpectationResult> check_expectations(const IntersectionModel& m);

// Triple product feeding an aggregate check.
struct Aggregate {
  std::string label;
  DivisorClass a, b, c;
};
// Products behind each expectation: S^3 for genus, S.S.D and every S.D.B
// for contractions.
std::vector<Aggregate> aggregates_of(const IntersectionModel& m);

// Unlisted triple on pairwise-meeting classes whose value would change an
// aggregate if it were nonzero.
struct Sensitivity {
  std::string key;        // "A B C"
  std::string aggregate;  // label of the first affected aggregate
  std::int64_t weight = 0;
};
std::vector<Sensitivity> sensitivity(const IntersectionModel& m, const std::vector<Aggregate>& aggregates);

}  // namespace efv::chow
