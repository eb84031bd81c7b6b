#pragma once

#include <stdexcept>
#include <vector>

#include "efv/polynomial.hpp"

namespace efv::test {

using poly::Monomial;
using poly::Polynomial;

// Sylvester resultant in variable 0 by fraction-free elimination.
inline Polynomial resultant_t(const Polynomial& f, const Polynomial& g) {
  auto coeffs = [](const Polynomial& p) {
    std::vector<Polynomial> c;
    for (auto& t : p.terms()) {
      int e = t.m[0];
      if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1, Polynomial(p.ring()));
      Monomial m = t.m;
      m.set(0, 0);
      c[static_cast<std::size_t>(e)] += Polynomial::term(p.ring(), m, t.c);
    }
    return c;
  };
  auto a = coeffs(f), b = coeffs(g);
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const int N = m + n;
  std::vector<std::vector<Polynomial>> M(static_cast<std::size_t>(N), std::vector<Polynomial>(static_cast<std::size_t>(N), Polynomial(f.ring())));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + m - k] = a[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + n - k] = b[k];
  // Bareiss.
  Polynomial prev = Polynomial::constant(f.ring(), 1);
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      int s = k + 1;
      while (s < N && M[s][k].is_zero()) ++s;
      if (s == N) return Polynomial(f.ring());
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) {
        auto q = poly::divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
        if (!q) throw std::logic_error("resultant: inexact division");
        M[i][j] = *q;
      }
    prev = M[k][k];
  }
  return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}


}  // namespace efv::test
