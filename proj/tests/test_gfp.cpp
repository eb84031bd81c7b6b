#include <cstdlib>

#include "doctest.h"
#include "efv/linalg.hpp"

using namespace efv::gf;

namespace {

DenseMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::size_t rank) {
  // Product of random r x rank and rank x c factors.
  DenseMatrix a(r, rank), b(rank, c), m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < rank; ++k) a.at(i, k) = rng.element();
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t j = 0; j < c; ++j) b.at(k, j) = rng.element();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = add(m.at(i, j), mul(a.at(i, k), b.at(k, j)));
  return m;
}

}  // namespace

TEST_CASE("inverse of small elements") {
  CHECK(fe_inv(FieldElement(1)).value() == 1);
  CHECK(fe_inv(FieldElement(2)).value() == 5000010);
  CHECK(mul(2, 5000010) == 1);
  CHECK_THROWS_AS(fe_inv(FieldElement(0)), DivisionByZero);
}

TEST_CASE("negative integers map to residues") {
  CHECK(from_int(-1) == kDefaultPrime - 1);
  CHECK(to_signed(from_int(-55)) == -55);
  CHECK((FieldElement(-2) * FieldElement(-3)).value() == 6);
}

TEST_CASE("inverse agrees with Fermat on random elements") {
  Rng rng(12345);
  const u32 p = Field::prime();
  for (int k = 0; k < 10000; ++k) {
    u32 a = rng.nonzero();
    u32 x = inv(a);
    REQUIRE(mul(a, x) == 1);
    REQUIRE(x == pow(a, p - 2));
    REQUIRE(pow(a, p - 1) == 1);
  }
}

TEST_CASE("multiplication matches 64-bit reference") {
  Rng rng(7);
  for (int k = 0; k < 10000; ++k) {
    u32 a = rng.element(), b = rng.element();
    REQUIRE(mul(a, b) == static_cast<u32>(static_cast<u64>(a) * b % Field::prime()));
  }
}

TEST_CASE("prime can be changed and restored") {
  {
    ScopedPrime sp(101);
    CHECK(Field::prime() == 101);
    CHECK(mul(inv(7), 7) == 1);
  }
  CHECK(Field::prime() == kDefaultPrime);
  CHECK_THROWS(Field::set_prime(100));
  CHECK_THROWS(Field::set_prime(1u << 25));
}

TEST_CASE("rref of identity and zero matrices") {
  auto id = DenseMatrix::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = rref_copy(id);
  CHECK(r.rank == 3);
  CHECK(r.kernel.empty());
  DenseMatrix z(2, 4);
  auto rz = rref_copy(z);
  CHECK(rz.rank == 0);
  CHECK(rz.kernel.size() == 4);
}

TEST_CASE("rank one two by three matrix") {
  auto m = DenseMatrix::from_ints({{1, 2, 3}, {2, 4, 6}});
  auto r = rref_copy(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  REQUIRE(r.kernel.size() == 2);
  for (auto& v : r.kernel) {
    auto mv = m.apply(v);
    CHECK(mv == std::vector<u32>{0, 0});
  }
}

TEST_CASE("rank plus nullity and kernel annihilation on random matrices") {
  Rng rng(99);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12), k = rng.below(std::min(r, c) + 1);
    DenseMatrix m = random_matrix(rng, r, c, k);
    auto res = rref_copy(m);
    CHECK(res.rank == k);
    CHECK(res.rank + res.kernel.size() == c);
    for (auto& v : res.kernel) CHECK(m.apply(v) == std::vector<u32>(r, 0));
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    DenseMatrix m = random_matrix(rng, 8, 10, 1 + rng.below(8));
    rref(m);
    DenseMatrix again = m;
    rref(again);
    CHECK(again == m);
  }
}

TEST_CASE("parallel and serial reduction agree") {
  Rng rng(11);
  for (int t = 0; t < 5; ++t) {
    DenseMatrix m = random_matrix(rng, 60, 90, 45);
    DenseMatrix a = m, b = m;
    auto pa = rref_serial(a);
    auto pb = rref_parallel(b);
    CHECK(pa == pb);
    CHECK(a == b);
  }
}

TEST_CASE("sparse rref matches dense rref") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 2 + rng.below(10), c = 2 + rng.below(15);
    DenseMatrix m(r, c);
    std::vector<SparseRow> rows(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng.below(3) == 0) {
          m.at(i, j) = rng.nonzero();
          rows[i].emplace_back(static_cast<u32>(j), m.at(i, j));
        }
    auto dense = rref_copy(m);
    DenseMatrix red = m;
    rref(red);
    std::vector<std::size_t> piv;
    auto sp = sparse_rref(rows, c, &piv);
    REQUIRE(sp.size() == dense.rank);
    CHECK(piv == dense.pivots);
    for (std::size_t i = 0; i < sp.size(); ++i) {
      std::vector<u32> row(c, 0);
      for (auto& [j, v] : sp[i]) row[j] = v;
      CHECK(std::vector<u32>(red.row(i), red.row(i) + c) == row);
    }
    auto sk = sparse_rref_kernel(rows, c);
    CHECK(sk.kernel == dense.kernel);
  }
}

TEST_CASE("thread cap honours the environment") {
  setenv("EFVERIFY_THREADS", "1", 1);
  CHECK(thread_cap() == 1);
  unsetenv("EFVERIFY_THREADS");
  CHECK(thread_cap() >= 1);
}
