#include <doctest.h>

#include <random>

#include "torelli/error.hpp"
#include "torelli/roots.hpp"

using namespace torelli;

namespace {

// Brute-force oracle: every x with f(x) = 0, multiplicity by repeated division.
std::vector<Root> brute_roots(const Poly& f) {
  std::vector<Root> out;
  for (Residue x = 0; x < f.field().prime(); ++x) {
    if (f.eval(x) != 0) continue;
    int m = 0;
    Poly g = f;
    while (g.eval(x) == 0) {
      g = g.taylor_shift(x);
      // drop one factor of t, then shift back
      std::vector<Residue> c(g.coeffs().begin() + 1, g.coeffs().end());
      g = Poly(f.field(), c).taylor_shift(f.field().neg(x));
      ++m;
    }
    out.push_back({x, m});
  }
  return out;
}

}  // namespace

TEST_CASE("x^2 + 1 has roots mod 101 but not mod 103") {
  const PrimeField F101(101), F103(103);
  const RootSet r101 = poly_roots(Poly::from_ints(F101, {1, 0, 1}));
  REQUIRE(r101.roots.size() == 2);
  CHECK(r101.roots[0].value == 10);
  CHECK(r101.roots[1].value == 91);
  CHECK(r101.splits);
  const RootSet r103 = poly_roots(Poly::from_ints(F103, {1, 0, 1}));
  CHECK(r103.roots.empty());
  CHECK_FALSE(r103.splits);
}

TEST_CASE("random polynomials agree with brute force") {
  std::mt19937_64 rng(77);
  for (std::uint32_t p : {101u, 103u}) {
    const PrimeField F(p);
    for (int t = 0; t < 60; ++t) {
      Poly f = Poly::constant(F, static_cast<Residue>(1 + rng() % (p - 1)));
      // Mix planted linear factors with random noise.
      const int lin = static_cast<int>(rng() % 4);
      for (int i = 0; i < lin; ++i) f *= Poly::linear(F, static_cast<Residue>(rng() % p));
      if (rng() % 2) {
        std::vector<Residue> c(1 + rng() % 6);
        for (auto& x : c) x = static_cast<Residue>(rng() % p);
        c.back() = 1;
        f *= Poly(F, c);
      }
      const RootSet rs = poly_roots(f);
      CHECK(rs.roots == brute_roots(f));
      int total = 0;
      for (const auto& r : rs.roots) total += r.multiplicity;
      CHECK(rs.splits == (total == f.degree()));
    }
  }
}

TEST_CASE("squarefree test and zero polynomial") {
  const PrimeField F(101);
  const Poly a = Poly::linear(F, 3) * Poly::linear(F, 5);
  CHECK(is_squarefree(a));
  CHECK_FALSE(is_squarefree(a * Poly::linear(F, 3)));
  CHECK_THROWS_AS(poly_roots(Poly(F)), Error);
  const RootSet c = poly_roots(Poly::constant(F, 7));
  CHECK(c.roots.empty());
  CHECK(c.splits);
}
