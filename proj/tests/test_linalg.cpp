#include <doctest.h>

#include <random>
#include <set>

#include "torelli/error.hpp"
#include "torelli/matrix.hpp"

using namespace torelli;

TEST_CASE("field arithmetic against brute force") {
  for (std::uint32_t p : {5u, 101u, 103u}) {
    const PrimeField F(p);
    std::set<Residue> squares;
    for (Residue a = 0; a < p; ++a) squares.insert(static_cast<Residue>(std::uint64_t{a} * a % p));
    for (Residue a = 0; a < p; ++a) {
      CHECK(F.is_square(a) == (squares.count(a) == 1));
      const auto r = F.sqrt(a);
      CHECK(r.has_value() == (squares.count(a) == 1));
      if (r) CHECK(F.mul(*r, *r) == a);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, p) == a);
    }
    CHECK(F.reduce(-1) == p - 1);
    CHECK(F.reduce(-static_cast<std::int64_t>(p) * 7 + 3) == 3);
  }
}

TEST_CASE("bad primes are rejected") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);
}

TEST_CASE("rank and kernel of small matrices") {
  const PrimeField F(101);
  const Matrix m = Matrix::from_rows(F, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  const RankKernel rk = rank_kernel(m);
  CHECK(rk.rank == 2);
  REQUIRE(rk.kernel.size() == 1);
  CHECK(rk.free_columns == std::vector<std::size_t>{2});
  const auto img = m.apply(rk.kernel[0]);
  for (Residue v : img) CHECK(v == 0);
  CHECK(rk.kernel[0][2] == 1);

  CHECK(rank(Matrix::identity(F, 5)) == 5);
  CHECK(rank(Matrix(F, 3, 4)) == 0);
  CHECK(rank(Matrix(F, 0, 4)) == 0);
}

TEST_CASE("Vandermonde matrices have full rank") {
  const PrimeField F(101);
  Matrix v(F, 6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) v.at(i, j) = F.pow(static_cast<Residue>(i + 3), j);
  }
  CHECK(rank(v) == 6);
}

TEST_CASE("random matrices: rank-nullity, rref idempotence, products") {
  const PrimeField F(103);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 9, k = 1 + rng() % 4, c = 1 + rng() % 9;
    // A product through a k-dimensional space has rank at most k.
    Matrix a(F, r, k), b(F, k, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) a.at(i, j) = static_cast<Residue>(rng() % 103);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) b.at(i, j) = static_cast<Residue>(rng() % 103);
    const Matrix m = a * b;
    const RankKernel rk = rank_kernel(m);
    CHECK(rk.rank <= std::min({r, k, c}));
    CHECK(rk.rank + rk.kernel.size() == c);
    CHECK(rk.rank == rank(m.transposed()));
    for (const auto& v : rk.kernel) {
      for (Residue x : m.apply(v)) CHECK(x == 0);
    }
    const Echelon e = rref(m);
    CHECK(e.pivots.size() == rk.rank);
    CHECK(rref(e.reduced).reduced == e.reduced);
  }
}
