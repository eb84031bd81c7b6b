#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace efv::poly {

inline constexpr int kMaxVars = 31;
inline constexpr int kMaxExponent = 127;

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent vector packed into 32 bytes; byte 31 holds the total degree.
// All exponents stay below 128, which lets divisibility be tested on whole
// 64-bit words.
class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int deg() const { return e_[31]; }
  void set(int i, int v) {
    if (v < 0 || v > kMaxExponent) throw ResourceLimit("exponent out of range");
    int d = deg() - e_[static_cast<std::size_t>(i)] + v;
    if (d > kMaxExponent) throw ResourceLimit("monomial degree exceeds 127");
    e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    e_[31] = static_cast<std::uint8_t>(d);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.deg() + b.deg() > kMaxExponent) throw ResourceLimit("monomial degree exceeds 127");
    Monomial r;
    for (int k = 0; k < 4; ++k) r.store(k, a.word(k) + b.word(k));
    return r;
  }
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int k = 0; k < 4; ++k) r.store(k, a.word(k) - b.word(k));
    return r;
  }
  bool divides(const Monomial& b) const {
    constexpr std::uint64_t H = 0x8080808080808080ULL;
    for (int k = 0; k < 4; ++k)
      if ((((b.word(k) | H) - word(k)) & H) != H) return false;
    return true;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b, int n) {
    Monomial r;
    for (int i = 0; i < n; ++i) r.set(i, a[i] > b[i] ? a[i] : b[i]);
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b, int n) {
    Monomial r;
    for (int i = 0; i < n; ++i) r.set(i, a[i] < b[i] ? a[i] : b[i]);
    return r;
  }
  bool coprime(const Monomial& b) const {
    for (int k = 0; k < 4; ++k) {
      std::uint64_t x = word(k), y = b.word(k);
      if (k == 3) {
        x &= 0x00FFFFFFFFFFFFFFULL;
        y &= 0x00FFFFFFFFFFFFFFULL;
      }
      // bytewise: nonzero byte in both
      std::uint64_t nx = ((x & 0x7F7F7F7F7F7F7F7FULL) + 0x7F7F7F7F7F7F7F7FULL) | x;
      std::uint64_t ny = ((y & 0x7F7F7F7F7F7F7F7FULL) + 0x7F7F7F7F7F7F7F7FULL) | y;
      if (nx & ny & 0x8080808080808080ULL) return false;
    }
    return true;
  }
  // Bit i set iff variable i occurs.
  std::uint32_t support_mask(int n) const {
    std::uint32_t m = 0;
    for (int i = 0; i < n; ++i)
      if (e_[static_cast<std::size_t>(i)]) m |= 1u << i;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (int k = 0; k < 4; ++k) {
      h ^= word(k) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  std::uint64_t word(int k) const {
    std::uint64_t w;
    std::memcpy(&w, e_.data() + 8 * k, 8);
    return w;
  }

 private:
  void store(int k, std::uint64_t w) { std::memcpy(e_.data() + 8 * k, &w, 8); }
  std::array<std::uint8_t, 32> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace efv::poly
