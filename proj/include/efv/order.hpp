#pragma once

#include <string>
#include <vector>

#include "efv/monomial.hpp"

namespace efv::poly {

enum class OrderKind { Grevlex, Lex, Block, Weighted };

// Total degree first, then the smallest exponent in the last differing
// variable wins.
inline int grevlex_cmp(const Monomial& a, const Monomial& b, int from, int to) {
  int da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = to - 1; i >= from; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, 0, {}); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0, {}); }
  // Monomials involving any of the first k variables rank above all others.
  static MonomialOrder block(int k) { return MonomialOrder(OrderKind::Block, k, {}); }
  // Block order whose blocks compare weighted degrees first; the weights
  // also drive pair selection, so weighted-homogeneous input stays graded.
  static MonomialOrder block(int k, std::vector<int> w) {
    return MonomialOrder(OrderKind::Block, k, std::move(w));
  }
  // Weight vector with grevlex tie-break; weights must be positive.
  static MonomialOrder weighted(std::vector<int> w) {
    return MonomialOrder(OrderKind::Weighted, 0, std::move(w));
  }

  OrderKind kind() const { return kind_; }
  int block_size() const { return k_; }
  const std::vector<int>& weights() const { return w_; }

  // >0 if a > b, <0 if a < b, 0 if equal. n = number of ring variables.
  int compare(const Monomial& a, const Monomial& b, int n) const {
    switch (kind_) {
      case OrderKind::Grevlex:
        if (a.deg() != b.deg()) return a.deg() > b.deg() ? 1 : -1;
        for (int i = n - 1; i >= 0; --i)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      case OrderKind::Lex:
        for (int i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::Block: {
        if (!w_.empty()) {
          int c = weighted_cmp(a, b, 0, k_);
          if (c) return c;
          return weighted_cmp(a, b, k_, n);
        }
        int c = grevlex_cmp(a, b, 0, k_);
        if (c) return c;
        return grevlex_cmp(a, b, k_, n);
      }
      case OrderKind::Weighted: {
        long wa = 0, wb = 0;
        for (int i = 0; i < n; ++i) {
          wa += static_cast<long>(w_[static_cast<std::size_t>(i)]) * a[i];
          wb += static_cast<long>(w_[static_cast<std::size_t>(i)]) * b[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        if (a.deg() != b.deg()) return a.deg() > b.deg() ? 1 : -1;
        for (int i = n - 1; i >= 0; --i)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

  // Sugar-style degree used for pair selection.
  long weight(const Monomial& a, int n) const {
    if (w_.empty()) return a.deg();
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(w_[static_cast<std::size_t>(i)]) * a[i];
    return s;
  }

  std::string name() const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_ && a.w_ == b.w_;
  }

 private:
  int weighted_cmp(const Monomial& a, const Monomial& b, int from, int to) const {
    long wa = 0, wb = 0;
    for (int i = from; i < to; ++i) {
      wa += static_cast<long>(w_[static_cast<std::size_t>(i)]) * a[i];
      wb += static_cast<long>(w_[static_cast<std::size_t>(i)]) * b[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
    return grevlex_cmp(a, b, from, to);
  }
  MonomialOrder(OrderKind k, int b, std::vector<int> w) : kind_(k), k_(b), w_(std::move(w)) {}
  OrderKind kind_;
  int k_;
  std::vector<int> w_;
};

}  // namespace efv::poly
