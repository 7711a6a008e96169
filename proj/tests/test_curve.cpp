#include <doctest.h>

#include "torelli/curve.hpp"
#include "torelli/error.hpp"
#include "torelli/series.hpp"

using namespace torelli;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalBoundError;
}

}  // namespace

TEST_CASE("curve validation") {
  CHECK(kind_of([] { make_curve(101, std::vector<std::int64_t>{1, 0, 0, 0, 1}); }) == ErrorKind::BadDegree);
  CHECK(kind_of([] { make_curve(101, std::vector<std::int64_t>{0, 1}); }) == ErrorKind::BadDegree);
  // x^2 (x - 1)
  CHECK(kind_of([] { make_curve(101, std::vector<std::int64_t>{0, 0, -1, 1}); }) == ErrorKind::NotSquarefree);
  CHECK(kind_of([] { make_curve(100, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1}); }) == ErrorKind::BadPrime);
  const CurvePtr C = make_curve(101, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1});
  CHECK(C->genus() == 2);
  CHECK(make_curve(101, std::vector<std::int64_t>{0, 1, 0, 0, 0, 0, 0, 1})->genus() == 3);
}

TEST_CASE("rational places match brute force") {
  const CurvePtr C = make_curve(101, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1});
  const PrimeField& F = C->field();
  std::size_t affine = 0;
  for (Residue x = 0; x < 101; ++x) {
    std::size_t n = 0;
    for (Residue y = 0; y < 101; ++y) n += F.mul(y, y) == C->f().eval(x) ? 1 : 0;
    CHECK(C->places_over(x).size() == n);
    affine += n;
  }
  const auto all = C->rational_places();
  CHECK(all.size() == affine + 1);
  CHECK(all.front().is_infinity());
  for (const auto& P : all) CHECK(C->contains(P));
  CHECK_FALSE(C->contains(Place::affine(3, 3)));
  CHECK(kind_of([&] { C->require_on_curve(Place::affine(3, 3)); }) == ErrorKind::NotOnCurve);
  // 5 divides 100, so x^5 = -1 has five roots mod 101
  const auto w = weierstrass_places(*C);
  REQUIRE(w.size() == 6);
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(F.pow(w[i].x(), 5) == 100);
  // 103 = 3 mod 5: only -1
  CHECK(weierstrass_places(*make_curve(103, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1})).size() == 2);
}

TEST_CASE("valuations of x and y") {
  const CurvePtr C = make_curve(101, std::vector<std::int64_t>{0, 24, -50, 35, -10, 1});  // x(x-1)(x-2)(x-3)(x-4)
  const PrimeField& F = C->field();
  const FunctionRep x = FunctionRep::x(F), y = FunctionRep::y(F);
  CHECK(valuation(*C, x, Place::infinity()) == -2);
  CHECK(valuation(*C, y, Place::infinity()) == -5);
  CHECK(valuation(*C, y, Place::affine(2, 0)) == 1);
  const FunctionRep xm2(Poly::linear(F, 2));
  CHECK(valuation(*C, xm2, Place::affine(2, 0)) == 2);
  CHECK(valuation(*C, inverse(*C, xm2), Place::affine(2, 0)) == -2);
  CHECK(valuation(*C, FunctionRep::constant(F, 0), Place::infinity()) == kInfiniteValuation);

  const auto over = C->places_over(5);
  REQUIRE(over.size() == 2);
  const Place P = over[0], Q = over[1];
  // y - y(P) vanishes simply at P and not at its conjugate.
  const FunctionRep t(Poly::constant(F, F.neg(P.y())), Poly::constant(F, 1), Poly::constant(F, 1));
  CHECK(valuation(*C, t, P) == 1);
  CHECK(valuation(*C, t, Q) == 0);
  CHECK(valuation(*C, FunctionRep(Poly::linear(F, 5)), P) == 1);
}

TEST_CASE("high-order contact is measured exactly") {
  // a + y with a the Taylor polynomial of -y at P: contact order grows with deg a.
  const CurvePtr C = make_curve(101, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1});
  const PrimeField& F = C->field();
  const Place P = C->places_over(2).at(0);
  for (std::size_t n = 1; n <= 8; ++n) {
    const Series ys = y_expansion(*C, P, n);
    std::vector<Residue> c(ys.begin(), ys.end());
    for (auto& v : c) v = F.neg(v);
    const Poly a = Poly(F, c).taylor_shift(F.neg(P.x()));
    CHECK(numerator_valuation(*C, a, Poly::constant(F, 1), P) >= static_cast<int>(n));
    CHECK(numerator_valuation(*C, a, Poly::constant(F, 1), C->conjugate(P)) == 0);
  }
}

TEST_CASE("function field arithmetic") {
  const CurvePtr C = make_curve(101, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1});
  const PrimeField& F = C->field();
  const FunctionRep y = FunctionRep::y(F);
  const FunctionRep u(Poly::linear(F, 7), Poly::constant(F, 3), Poly::linear(F, 2));
  const FunctionRep one = FunctionRep::constant(F, 1);
  CHECK(multiply(*C, u, inverse(*C, u)) == one);
  CHECK(multiply(*C, y, y) == FunctionRep(C->f()));
  CHECK(u - u == FunctionRep::constant(F, 0));
  CHECK(power(*C, u, 3) == multiply(*C, u, multiply(*C, u, u)));
  CHECK(kind_of([&] { inverse(*C, FunctionRep::constant(F, 0)); }) == ErrorKind::ZeroFunction);
  // Degree-zero divisor: valuations over all places sum to zero for a split function.
  const FunctionRep w(Poly::linear(F, 2), Poly(F), Poly::linear(F, 100));
  int total = 0;
  for (const auto& P : C->rational_places()) total += valuation(*C, w, P);
  CHECK(total == 0);
}
