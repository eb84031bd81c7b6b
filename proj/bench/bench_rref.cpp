// Times serial and OpenMP row reduction on random matrices and checks that
// both produce the same echelon form.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "efv/linalg.hpp"

using namespace efv::gf;

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 600;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  Rng rng(2024);
  std::printf("threads=%d size=%zux%zu reps=%d\n", thread_cap(), n, n + n / 2, reps);
  double ts = 0, tp = 0;
  for (int r = 0; r < reps; ++r) {
    DenseMatrix m(n, n + n / 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.element();
    DenseMatrix a = m, b = m;
    auto t0 = std::chrono::steady_clock::now();
    auto pa = rref_serial(a);
    auto t1 = std::chrono::steady_clock::now();
    auto pb = rref_parallel(b);
    auto t2 = std::chrono::steady_clock::now();
    if (pa != pb || !(a == b)) {
      std::printf("MISMATCH on repetition %d\n", r);
      return 1;
    }
    ts += std::chrono::duration<double, std::milli>(t1 - t0).count();
    tp += std::chrono::duration<double, std::milli>(t2 - t1).count();
  }
  std::printf("serial   %.1f ms/rep\nparallel %.1f ms/rep\nspeedup  %.2fx\n", ts / reps, tp / reps, ts / tp);
  return 0;
}
