#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace efv::gf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline constexpr u32 kDefaultPrime = 10000019;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Z/pZ") {}
};

// Process-wide modulus. Every polynomial and matrix uses the prime that is
// active when it is built; switch it only between computations.
class Field {
 public:
  static u32 prime() { return p_; }
  static double inv_prime() { return pinv_; }
  // Throws std::invalid_argument unless 2 < p < 2^24 and p is prime.
  static void set_prime(u32 p);

 private:
  static inline u32 p_ = kDefaultPrime;
  static inline double pinv_ = 1.0 / kDefaultPrime;
};

class ScopedPrime {
 public:
  explicit ScopedPrime(u32 p) : saved_(Field::prime()) { Field::set_prime(p); }
  ~ScopedPrime() { Field::set_prime(saved_); }
  ScopedPrime(const ScopedPrime&) = delete;
  ScopedPrime& operator=(const ScopedPrime&) = delete;

 private:
  u32 saved_;
};

bool is_prime(u64 n);

inline u32 add(u32 a, u32 b) {
  u32 s = a + b;
  u32 p = Field::prime();
  return s >= p ? s - p : s;
}
inline u32 sub(u32 a, u32 b) { return a >= b ? a - b : a + Field::prime() - b; }
inline u32 neg(u32 a) { return a == 0 ? 0 : Field::prime() - a; }

// p < 2^24, so a*b < 2^48 is exact in a double and the quotient estimate is
// off by at most one.
inline u32 mul(u32 a, u32 b) {
  u64 ab = static_cast<u64>(a) * b;
  u32 p = Field::prime();
  u64 q = static_cast<u64>(static_cast<double>(ab) * Field::inv_prime());
  std::int64_t r = static_cast<std::int64_t>(ab - q * p);
  if (r < 0) r += p;
  if (r >= static_cast<std::int64_t>(p)) r -= p;
  return static_cast<u32>(r);
}

inline u32 reduce(u64 x) { return static_cast<u32>(x % Field::prime()); }

u32 inv(u32 a);             // extended Euclid
u32 pow(u32 a, u64 e);      // square and multiply
u32 from_int(std::int64_t v);
// Signed representative in (-p/2, p/2].
std::int64_t to_signed(u32 a);

// Residue in [0, p) bound to the active prime.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::int64_t v) : v_(from_int(v)) {}  // NOLINT implicit
  static FieldElement raw(u32 v) {
    FieldElement f;
    f.v_ = v;
    return f;
  }
  u32 value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement inv() const { return raw(gf::inv(v_)); }
  FieldElement pow(u64 e) const { return raw(gf::pow(v_, e)); }

  friend FieldElement operator+(FieldElement a, FieldElement b) { return raw(add(a.v_, b.v_)); }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return raw(sub(a.v_, b.v_)); }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return raw(mul(a.v_, b.v_)); }
  friend FieldElement operator/(FieldElement a, FieldElement b) { return a * b.inv(); }
  FieldElement operator-() const { return raw(neg(v_)); }
  friend bool operator==(FieldElement a, FieldElement b) { return a.v_ == b.v_; }
  friend bool operator!=(FieldElement a, FieldElement b) { return a.v_ != b.v_; }

 private:
  u32 v_ = 0;
};

inline FieldElement fe_inv(FieldElement a) { return a.inv(); }

// Uniform residues from a fixed-algorithm generator so that seeds reproduce
// across platforms.
class Rng {
 public:
  explicit Rng(u64 seed) : gen_(seed) {}
  u32 element() { return static_cast<u32>(gen_() % Field::prime()); }
  u32 nonzero() {
    for (;;) {
      u32 v = element();
      if (v != 0) return v;
    }
  }
  u64 below(u64 n) { return gen_() % n; }
  u64 next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace efv::gf
