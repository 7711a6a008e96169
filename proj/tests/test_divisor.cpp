#include <doctest.h>

#include "torelli/divisor.hpp"
#include "torelli/error.hpp"

using namespace torelli;

namespace {

CurvePtr g2() { return make_curve(101, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1}); }

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

TEST_CASE("divisor arithmetic") {
  const CurvePtr C = g2();
  const Place P = Place::affine(2, 29), Q = Place::affine(2, 72);
  const Divisor D = Divisor::point(C, P, 2) - Divisor::at_infinity(C, 1);
  CHECK(D.degree() == 1);
  CHECK(D.coeff(P) == 2);
  CHECK(D.coeff(Q) == 0);
  CHECK_FALSE(D.is_effective());
  CHECK((D - D).is_zero());
  CHECK(-(-D) == D);
  CHECK(3 * D == D + D + D);
  CHECK(D.support().size() == 2);
  CHECK((D + Divisor::at_infinity(C, 1)).is_effective());
  // zero coefficients are dropped
  CHECK(Divisor(C, {{P, 0}, {Q, 1}}).terms().size() == 1);
  CHECK(kind_of([&] { Divisor::point(C, Place::affine(3, 3)); }) == ErrorKind::NotOnCurve);
}

TEST_CASE("divisors on different curves do not mix") {
  const CurvePtr C = g2();
  const CurvePtr E = make_curve(101, std::vector<std::int64_t>{4, 3, 0, 1});
  CHECK(kind_of([&] { return Divisor::at_infinity(C, 1) + Divisor::at_infinity(E, 1); }) ==
        ErrorKind::CurveMismatch);
}

TEST_CASE("divisor of a function") {
  const CurvePtr C = g2();
  const PrimeField& F = C->field();
  const Divisor d = divisor_of_function(C, FunctionRep(Poly::linear(F, 2)));
  CHECK(d == Divisor(C, {{Place::infinity(), -2}, {Place::affine(2, 29), 1}, {Place::affine(2, 72), 1}}));
  CHECK(d.degree() == 0);
  // x^5 + 1 splits mod 101, so div(y) is the five affine Weierstrass places minus 5 inf
  Divisor w = Divisor::at_infinity(C, -5);
  for (const auto& P : weierstrass_places(*C)) {
    if (!P.is_infinity()) w += Divisor::point(C, P);
  }
  CHECK(divisor_of_function(C, FunctionRep::y(F)) == w);
  const CurvePtr C103 = make_curve(103, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1});
  CHECK(kind_of([&] { divisor_of_function(C103, FunctionRep::y(C103->field())); }) == ErrorKind::NonSplitSupport);
  // 3^5 + 1 = 42 is not a square mod 101
  CHECK(kind_of([&] { divisor_of_function(C, FunctionRep(Poly::linear(F, 3))); }) == ErrorKind::NonSplitSupport);
  CHECK(kind_of([&] { divisor_of_function(C, FunctionRep::constant(F, 0)); }) == ErrorKind::ZeroFunction);
  CHECK(divisor_of_function(C, FunctionRep::constant(F, 5)).is_zero());
  // principal divisors are additive
  const FunctionRep u(Poly::linear(F, 2), Poly(F), Poly::linear(F, 100));
  const FunctionRep v(Poly::linear(F, 100));
  CHECK(divisor_of_function(C, multiply(*C, u, v)) ==
        divisor_of_function(C, u) + divisor_of_function(C, v));
}

TEST_CASE("canonical divisor and support reduction") {
  const CurvePtr C = g2();
  CHECK(canonical_divisor(C) == Divisor::at_infinity(C, 2));
  const Divisor D = Divisor::point(C, Place::affine(2, 29), 3) + Divisor::at_infinity(C, 1);
  const Divisor R = reduce_support(D);
  CHECK(R.degree() == 2);
  CHECK(R.coeff(Place::affine(2, 29)) == 1);
  CHECK(kind_of([&] { reduce_support(-D); }) == ErrorKind::NotEffective);
}
