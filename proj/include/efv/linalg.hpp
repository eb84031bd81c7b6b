#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "efv/field.hpp"

namespace efv::gf {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static DenseMatrix from_ints(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u32& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  u32* row(std::size_t r) { return a_.data() + r * cols_; }
  const u32* row(std::size_t r) const { return a_.data() + r * cols_; }

  std::vector<u32> apply(const std::vector<u32>& v) const;
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<u32> a_;
};

using SparseRow = std::vector<std::pair<u32, u32>>;  // (column, value), columns ascending

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<u32>> kernel;  // column vectors of length cols
};

// Number of worker threads for parallel kernels: EFVERIFY_THREADS if set,
// otherwise the OpenMP default.
int thread_cap();

// In-place Gauss-Jordan elimination with the leftmost-pivot rule. Rows are
// permuted so that the first `rank` rows hold the reduced echelon form.
std::vector<std::size_t> rref_serial(DenseMatrix& m);
std::vector<std::size_t> rref_parallel(DenseMatrix& m);

// Reduces `m` in place and returns rank, pivots and a kernel basis. Picks
// the parallel kernel for large inputs.
RrefResult rref(DenseMatrix& m);
RrefResult rref_copy(const DenseMatrix& m);

// Reduced echelon form of sparse rows; output rows are sorted by pivot.
std::vector<SparseRow> sparse_rref(std::vector<SparseRow> rows, std::size_t cols,
                                   std::vector<std::size_t>* pivots);
RrefResult sparse_rref_kernel(std::vector<SparseRow> rows, std::size_t cols);

// Kernel basis from a reduced echelon form. One vector per free column,
// with a 1 in that column.
std::vector<std::vector<u32>> kernel_from_rref(const DenseMatrix& reduced,
                                               const std::vector<std::size_t>& pivots);

}  // namespace efv::gf
