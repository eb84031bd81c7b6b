#include "efv/field.hpp"

namespace efv::gf {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void Field::set_prime(u32 p) {
  if (p <= 2 || p >= (1u << 24) || !is_prime(p))
    throw std::invalid_argument("modulus must be an odd prime below 2^24: " + std::to_string(p));
  p_ = p;
  pinv_ = 1.0 / p;
}

u32 inv(u32 a) {
  if (a == 0) throw DivisionByZero();
  std::int64_t t = 0, nt = 1;
  std::int64_t r = Field::prime(), nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += Field::prime();
  return static_cast<u32>(t);
}

u32 pow(u32 a, u64 e) {
  u32 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u32 from_int(std::int64_t v) {
  std::int64_t p = Field::prime();
  v %= p;
  if (v < 0) v += p;
  return static_cast<u32>(v);
}

std::int64_t to_signed(u32 a) {
  std::int64_t p = Field::prime();
  return a > p / 2 ? static_cast<std::int64_t>(a) - p : a;
}

}  // namespace efv::gf
