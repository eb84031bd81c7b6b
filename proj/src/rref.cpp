#include <algorithm>
#include <cstdlib>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "efv/linalg.hpp"

namespace efv::gf {

DenseMatrix DenseMatrix::from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = from_int(rows[i].at(j));
  return m;
}

std::vector<u32> DenseMatrix::apply(const std::vector<u32>& v) const {
  std::vector<u32> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    u32 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = add(acc, mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

int thread_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("EFVERIFY_THREADS")) {
      int n = std::atoi(s);
      if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }();
  return cap;
}

namespace {

void scale_row(u32* r, std::size_t from, std::size_t cols, u32 f) {
  for (std::size_t j = from; j < cols; ++j) r[j] = mul(r[j], f);
}

// r -= f * p on columns [from, cols)
void axpy_row(u32* r, const u32* p, std::size_t from, std::size_t cols, u32 f) {
  u32 nf = neg(f);
  for (std::size_t j = from; j < cols; ++j)
    if (p[j]) r[j] = add(r[j], mul(nf, p[j]));
}

template <bool Parallel>
std::vector<std::size_t> gauss_jordan(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (m.at(i, c)) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != rank) std::swap_ranges(m.row(sel), m.row(sel) + cols, m.row(rank));
    u32* prow = m.row(rank);
    scale_row(prow, c, cols, inv(prow[c]));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
    const std::ptrdiff_t pr = static_cast<std::ptrdiff_t>(rank);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_cap())
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (i == pr) continue;
        u32* r = m.row(static_cast<std::size_t>(i));
        if (r[c]) axpy_row(r, prow, c, cols, r[c]);
      }
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (i == pr) continue;
        u32* r = m.row(static_cast<std::size_t>(i));
        if (r[c]) axpy_row(r, prow, c, cols, r[c]);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_serial(DenseMatrix& m) { return gauss_jordan<false>(m); }
std::vector<std::size_t> rref_parallel(DenseMatrix& m) { return gauss_jordan<true>(m); }

std::vector<std::vector<u32>> kernel_from_rref(const DenseMatrix& reduced,
                                               const std::vector<std::size_t>& pivots) {
  const std::size_t cols = reduced.cols();
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<u32>> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u32> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = neg(reduced.at(k, f));
    kernel.push_back(std::move(v));
  }
  return kernel;
}

RrefResult rref(DenseMatrix& m) {
  RrefResult res;
  const bool big = m.rows() * m.cols() >= (1u << 16) && thread_cap() > 1;
  res.pivots = big ? rref_parallel(m) : rref_serial(m);
  res.rank = res.pivots.size();
  res.kernel = kernel_from_rref(m, res.pivots);
  return res;
}

RrefResult rref_copy(const DenseMatrix& m) {
  DenseMatrix c = m;
  return rref(c);
}

namespace {

// Dense accumulator reduction of one sparse row against pivot rows.
SparseRow reduce_against(const SparseRow& row, std::size_t cols,
                         const std::vector<std::ptrdiff_t>& pivot_of,
                         const std::vector<SparseRow>& pivot_rows, std::vector<u32>& buf) {
  if (row.empty()) return {};
  std::size_t lo = row.front().first;
  for (auto& [c, v] : row) buf[c] = v;
  SparseRow out;
  for (std::size_t c = lo; c < cols; ++c) {
    u32 v = buf[c];
    if (!v) continue;
    std::ptrdiff_t p = pivot_of[c];
    if (p >= 0) {
      u32 nf = neg(v);
      for (auto& [pc, pv] : pivot_rows[static_cast<std::size_t>(p)])
        buf[pc] = add(buf[pc], mul(nf, pv));
      buf[c] = 0;
    } else {
      out.emplace_back(static_cast<u32>(c), v);
      buf[c] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<SparseRow> sparse_rref(std::vector<SparseRow> rows, std::size_t cols,
                                   std::vector<std::size_t>* pivots) {
  std::vector<std::ptrdiff_t> pivot_of(cols, -1);
  std::vector<SparseRow> prow;
  std::vector<u32> buf(cols, 0);
  for (auto& r : rows) {
    SparseRow red = reduce_against(r, cols, pivot_of, prow, buf);
    if (red.empty()) continue;
    u32 s = inv(red.front().second);
    for (auto& e : red) e.second = mul(e.second, s);
    pivot_of[red.front().first] = static_cast<std::ptrdiff_t>(prow.size());
    prow.push_back(std::move(red));
  }
  // Back substitution, rightmost pivot first, so every pivot row is reduced
  // by pivot rows that are already final.
  std::vector<std::size_t> order(prow.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return prow[a].front().first > prow[b].front().first; });
  for (std::size_t idx : order) {
    SparseRow& r = prow[idx];
    u32 lead = r.front().first;
    for (auto& [c, v] : r) buf[c] = v;
    SparseRow out;
    for (std::size_t c = lead; c < cols; ++c) {
      u32 v = buf[c];
      if (!v) continue;
      std::ptrdiff_t p = pivot_of[c];
      if (c != lead && p >= 0) {
        u32 nf = neg(v);
        for (auto& [pc, pv] : prow[static_cast<std::size_t>(p)]) buf[pc] = add(buf[pc], mul(nf, pv));
        buf[c] = 0;
      } else {
        out.emplace_back(static_cast<u32>(c), v);
        buf[c] = 0;
      }
    }
    r = std::move(out);
  }
  std::sort(prow.begin(), prow.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  if (pivots) {
    pivots->clear();
    for (auto& r : prow) pivots->push_back(r.front().first);
  }
  return prow;
}

RrefResult sparse_rref_kernel(std::vector<SparseRow> rows, std::size_t cols) {
  RrefResult res;
  auto red = sparse_rref(std::move(rows), cols, &res.pivots);
  res.rank = red.size();
  std::vector<char> is_pivot(cols, 0);
  for (auto p : res.pivots) is_pivot[p] = 1;
  // Column-major view of the non-pivot entries.
  std::map<std::size_t, std::vector<std::pair<std::size_t, u32>>> by_free;
  for (std::size_t k = 0; k < red.size(); ++k)
    for (auto& [c, v] : red[k])
      if (!is_pivot[c]) by_free[c].emplace_back(res.pivots[k], v);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u32> v(cols, 0);
    v[f] = 1;
    auto it = by_free.find(f);
    if (it != by_free.end())
      for (auto& [pc, val] : it->second) v[pc] = neg(val);
    res.kernel.push_back(std::move(v));
  }
  return res;
}

}  // namespace efv::gf
