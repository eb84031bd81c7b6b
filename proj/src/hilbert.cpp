#include "efv/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace efv::gb {

using poly::Monomial;
using i64 = std::int64_t;
using i128 = __int128;
using TPoly = std::vector<i64>;

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly add(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

TPoly shift(const TPoly& a, int k) {
  if (a.empty()) return a;
  TPoly r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> g, int n) {
  std::sort(g.begin(), g.end(), [n](const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return poly::grevlex_greater(a, b, n);
  });
  std::vector<Monomial> out;
  for (auto& m : g) {
    bool red = false;
    for (auto& k : out)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

// Numerator of the Hilbert series of k[x]/M for a minimal generating set M.
TPoly numerator(const std::vector<Monomial>& M, int n) {
  if (M.empty()) return {1};
  // Base case: pairwise coprime generators.
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (auto& m : M)
    for (int i = 0; i < n; ++i)
      if (m[i]) ++count[static_cast<std::size_t>(i)];
  int best = -1;
  for (int i = 0; i < n; ++i)
    if (count[static_cast<std::size_t>(i)] >= 2 && (best < 0 || count[static_cast<std::size_t>(i)] > count[static_cast<std::size_t>(best)]))
      best = i;
  if (best < 0) {
    TPoly r{1};
    for (auto& m : M) {
      TPoly f(static_cast<std::size_t>(m.deg()) + 1, 0);
      f[0] = 1;
      f[static_cast<std::size_t>(m.deg())] -= 1;
      r = mul(r, f);
    }
    return r;
  }
  std::vector<int> exps;
  for (auto& m : M)
    if (m[best]) exps.push_back(m[best]);
  std::sort(exps.begin(), exps.end());
  int e = exps[(exps.size() - 1) / 2];
  Monomial p = Monomial::var(best, e);
  // M + <p>
  std::vector<Monomial> plus;
  for (auto& m : M)
    if (!p.divides(m)) plus.push_back(m);
  plus.push_back(p);
  // M : p
  std::vector<Monomial> colon;
  for (auto& m : M) {
    Monomial q = m;
    q.set(best, std::max(0, m[best] - e));
    colon.push_back(q);
  }
  TPoly a = numerator(minimalize(std::move(plus), n), n);
  TPoly b = numerator(minimalize(std::move(colon), n), n);
  return add(a, shift(b, e));
}

i64 binom(i64 a, i64 b) {
  if (b < 0 || a < b) return 0;
  i128 r = 1;
  for (i64 k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return static_cast<i64>(r);
}

Rational make_rat(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num, b = den;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return {static_cast<i64>(num / a), static_cast<i64>(den / a)};
}

}  // namespace

i64 HilbertData::hilbert_function(int e) const {
  if (e < 0) return 0;
  const int d = affine_dim;
  i64 s = 0;
  for (std::size_t i = 0; i < reduced_numerator.size(); ++i) {
    i64 k = e - static_cast<i64>(i);
    if (k < 0) break;
    s += reduced_numerator[i] * (d == 0 ? (k == 0 ? 1 : 0) : binom(k + d - 1, d - 1));
  }
  return s;
}

Rational HilbertData::polynomial_at(i64 e) const {
  i128 num = 0, den = 1;
  i128 pw = 1;
  // Common denominator accumulation.
  for (auto& c : hilbert_polynomial) {
    num = num * c.den + static_cast<i128>(c.num) * pw * den;
    den *= c.den;
    Rational r = make_rat(num, den);
    num = r.num;
    den = r.den;
    pw *= e;
  }
  return make_rat(num, den);
}

i64 HilbertData::curve_genus() const {
  if (projective_dim != 1) throw std::domain_error("genus is defined only for curves");
  Rational p0 = polynomial_at(0);
  if (p0.den != 1) throw std::logic_error("non-integral Hilbert polynomial");
  return 1 - p0.num;
}

HilbertData hilbert_from_monomials(const std::vector<Monomial>& gens, int n) {
  HilbertData h;
  h.nvars = n;
  h.numerator = numerator(minimalize(gens, n), n);
  if (h.numerator.empty()) {
    h.affine_dim = 0;
    h.projective_dim = -1;
    h.degree = 0;
    return h;
  }
  // Divide by (1 - t) while possible.
  TPoly q = h.numerator;
  int k = 0;
  while (k < n) {
    i64 s = std::accumulate(q.begin(), q.end(), i64{0});
    if (s != 0) break;
    // synthetic division by (1 - t): q = (1-t) r  =>  r_i = sum_{j<=i} q_j
    TPoly r(q.size() - 1, 0);
    i64 acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      r[i] = acc;
    }
    trim(r);
    q = r;
    ++k;
  }
  h.reduced_numerator = q;
  h.affine_dim = n - k;
  h.projective_dim = h.affine_dim - 1;
  h.degree = std::accumulate(q.begin(), q.end(), i64{0});
  const int d = h.affine_dim;
  if (d == 0) return h;
  // P(e) = sum_i q_i * C(e - i + d - 1, d - 1), expanded in powers of e.
  std::vector<i128> acc(static_cast<std::size_t>(d), 0);
  i128 fact = 1;
  for (int j = 1; j < d; ++j) fact *= j;
  for (std::size_t i = 0; i < q.size(); ++i) {
    // prod_{j=0}^{d-2} (e + (d-1-i) - j)
    std::vector<i128> pe{1};
    for (int j = 0; j < d - 1; ++j) {
      i128 c = static_cast<i128>(d - 1) - static_cast<i128>(i) - j;
      std::vector<i128> nx(pe.size() + 1, 0);
      for (std::size_t a = 0; a < pe.size(); ++a) {
        nx[a] += pe[a] * c;
        nx[a + 1] += pe[a];
      }
      pe = nx;
    }
    for (std::size_t a = 0; a < pe.size(); ++a) acc[a] += pe[a] * q[i];
  }
  for (auto& a : acc) h.hilbert_polynomial.push_back(make_rat(a, fact));
  while (!h.hilbert_polynomial.empty() && h.hilbert_polynomial.back().num == 0) h.hilbert_polynomial.pop_back();
  return h;
}

HilbertData hilbert(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("hilbert: ideal is not homogeneous");
  const GroebnerBasis& b = I.basis();
  return hilbert_from_monomials(b.leads(), I.nvars());
}

}  // namespace efv::gb
