#include <doctest.h>

#include <random>

#include "torelli/error.hpp"
#include "torelli/generators.hpp"

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

SurfaceInvariants inv(int g, int d, int s, JClass j) {
  SurfaceInvariants i;
  i.g = g;
  i.d = d;
  i.s = s;
  i.j_class = j;
  return i;
}

void expect(const SurfaceInvariants& i, Outcome o, const std::string& id, const std::string& tag) {
  const Verdict v = torelli_verdict(i);
  CHECK(to_string(v.outcome) == std::string(to_string(o)));
  CHECK(v.rule_id == id);
  CHECK(v.rule == tag);
}

}  // namespace

TEST_CASE("rational, K3 and genus-1 classics") {
  auto r0 = inv(0, 1, 2, JClass::Nonconstant);
  expect(r0, Outcome::Fails, "R0", "rationalOrProduct");
  auto prod = inv(0, 0, 0, JClass::ConstantZero);
  prod.L_trivial = true;
  expect(prod, Outcome::Fails, "R0", "rationalOrProduct");
  expect(inv(0, 2, 3, JClass::ConstantZero), Outcome::Holds, "R1", "mainThmCst(1):K3");
  auto g1 = inv(1, 1, 2, JClass::ConstantOther);
  g1.h0_L = 1;
  expect(g1, Outcome::Fails, "R2a", "constJCounterG1");
  expect(inv(1, 2, 4, JClass::ConstantOther), Outcome::Fails, "R2a", "constJCounterG1");
}

TEST_CASE("d = 1 effective is conjectural, d = 1 with h0 = 0 and nonconstant j holds") {
  auto a = inv(2, 1, 5, JClass::Nonconstant);
  a.h0_L = 1;
  expect(a, Outcome::ConjecturallyFails, "R2", "conjecture:d1-effective");
  a.h0_L = 0;
  expect(a, Outcome::Holds, "R3", "mainThm");
  expect(inv(2, 3, 20, JClass::Nonconstant), Outcome::Holds, "R3", "mainThm");
}

TEST_CASE("missing optional invariants do not fire dependent rules") {
  expect(inv(2, 1, 5, JClass::Nonconstant), Outcome::OutOfScope, "R10", "out-of-scope");
  expect(inv(2, 1, 2, JClass::ConstantZero), Outcome::OutOfScope, "R10", "out-of-scope");
  // R6 needs h0(L^-1 Delta); without it the case falls through to R8 or R9.
  const Verdict v = torelli_verdict(inv(1, 5, 6, JClass::ConstantZero));
  CHECK(v.rule_id != "R6");
}

TEST_CASE("fiber bundles") {
  auto t = inv(2, 0, 0, JClass::ConstantZero);
  t.L_trivial = true;
  t.h1_parity = Parity::Odd;
  expect(t, Outcome::Fails, "R4", "fiberBundleRemark:h1-odd");
  t.g = 1;
  expect(t, Outcome::Holds, "R4", "fiberBundleRemark:h1-odd");
  t.h1_parity = Parity::Even;
  expect(t, Outcome::EquivalentToMu, "R5", "fiberBundleThm");
  auto n = inv(1, 0, 0, JClass::ConstantOther);
  expect(n, Outcome::Fails, "R5", "fiberBundleCor:g1");
  n.g = 3;
  expect(n, Outcome::EquivalentToMu, "R5", "fiberBundleThm");
}

TEST_CASE("constant-j counterexamples") {
  auto a = inv(1, 5, 6, JClass::ConstantZero);
  a.h0_Linv_Delta = 1;
  expect(a, Outcome::Fails, "R6", "ThmCounter/lemKosNonVanA");
  auto b = inv(1, 2, 4, JClass::ConstantZero);
  b.L2_is_Delta = true;
  b.h0_Linv_Delta = 0;
  expect(b, Outcome::Fails, "R7", "ThmCounter/lemKosNonVanB");
}

TEST_CASE("vanishing lemmas") {
  expect(inv(2, 3, 5, JClass::ConstantZero), Outcome::Holds, "R8", "lemKosVanA(1)");
  expect(inv(2, 2, 5, JClass::Constant1728), Outcome::Holds, "R8", "lemKosVanA(2)");
  auto a3 = inv(2, 2, 4, JClass::ConstantZero);
  a3.h0_L2inv_Delta = 0;
  expect(a3, Outcome::Holds, "R8", "lemKosVanA(3)");

  auto b = inv(3, 3, 4, JClass::ConstantZero);
  b.h0_Linv_Delta = 0;
  expect(b, Outcome::EquivalentToMu, "R9", "prpRedKos");
  b.clifford = 2;
  expect(b, Outcome::Holds, "R8", "lemKosVanB");
  CHECK(torelli_verdict(b).assumption_dependent);

  auto c = inv(2, 2, 4, JClass::ConstantZero);
  c.L2_is_Delta = true;
  c.h0_Linv_Delta = 0;
  c.h0_L2inv_Delta = 1;
  c.clifford = 1;
  expect(c, Outcome::Holds, "R8", "lemKosVanC");

  auto d = inv(3, 1, 3, JClass::ConstantZero);
  d.h0_L = 0;
  d.h0_Linv_Delta = 0;
  d.h0_L2inv_Delta = 1;
  d.clifford = 2;
  expect(d, Outcome::Holds, "R8", "lemKosVanD");
}

TEST_CASE("d = 1, s = 4 with Delta - 2L the hyperelliptic pencil") {
  auto a = inv(2, 1, 4, JClass::ConstantZero);
  a.h0_L = 0;
  a.h0_Linv_Delta = 2;
  expect(a, Outcome::EquivalentToMu, "R9", "prpRedKos");
  a.h0_L2inv_Delta = 2;
  expect(a, Outcome::EquivalentToMu, "R9", "prpRedKos");
  a.h0_L2inv_Delta = 1;
  expect(a, Outcome::Holds, "R8", "lemKosVanA(2)");
  a.h0_L2inv_Delta.reset();
  a.clifford = 2;
  expect(a, Outcome::Holds, "R8", "lemKosVanA(2)");

  // A concrete instance: K + L is a base point free pencil, so the kernel of mu
  // is H0(Delta - 2L) = H0(K) and mu has rank 2 * 4 - 2 = 6 < 7.
  const CurvePtr C = genus2_split_curve(101);
  ConstantJRecipe r;
  r.j = JClass::ConstantZero;
  r.d = 1;
  r.twist = std::make_pair(Residue{4}, Residue{2});
  r.roots = {{29, 1}, {33, 2}};
  const WeierstrassData W = constant_j_instance(C, r);
  const SurfaceInvariants i = invariants_from_weierstrass(W);
  CHECK(i.s == 4);
  CHECK(i.h0_L2inv_Delta == 2);
  CHECK(linearly_equivalent(C, *i.delta - 2 * W.L, canonical_divisor(C)));
  const Verdict v = torelli_decide(W, i, true);
  CHECK(v.rule_id == "R9");
  CHECK(v.outcome == Outcome::Fails);
  CHECK(v.mu_rank == 6);
  CHECK(v.mu_target == 7);
}

TEST_CASE("inconsistent invariants") {
  CHECK(kind_of([] { torelli_verdict(inv(2, 3, 3, JClass::Nonconstant)); }) == ErrorKind::InconsistentInvariants);
  CHECK(kind_of([] { torelli_verdict(inv(2, 6, 7, JClass::ConstantZero)); }) == ErrorKind::InconsistentInvariants);
  CHECK(kind_of([] { torelli_verdict(inv(2, 0, 0, JClass::Nonconstant)); }) == ErrorKind::InconsistentInvariants);
  auto t = inv(2, 1, 3, JClass::Nonconstant);
  t.L_trivial = true;
  CHECK(kind_of([&] { torelli_verdict(t); }) == ErrorKind::InconsistentInvariants);
  auto c = inv(2, 2, 4, JClass::Nonconstant);
  c.clifford = -1;
  CHECK(kind_of([&] { torelli_verdict(c); }) == ErrorKind::InconsistentInvariants);
}

TEST_CASE("reduction hypotheses") {
  CHECK(reduction_applies(inv(0, 3, 4, JClass::ConstantZero)));
  CHECK(reduction_applies(inv(1, 2, 3, JClass::ConstantZero)));
  CHECK_FALSE(reduction_applies(inv(0, 2, 3, JClass::ConstantZero)));
  CHECK_FALSE(reduction_applies(inv(2, 3, 4, JClass::Nonconstant)));
  auto d1 = inv(2, 1, 2, JClass::ConstantZero);
  CHECK_FALSE(reduction_applies(d1));
  d1.h0_L = 0;
  CHECK(reduction_applies(d1));
}

TEST_CASE("j classification") {
  const CurvePtr C = genus2_curve(101);
  const PrimeField& F = C->field();
  const FunctionRep zero = FunctionRep::constant(F, 0), one = FunctionRep::constant(F, 1);
  const FunctionRep x = FunctionRep::x(F);
  CHECK(classify_j(*C, zero, x) == JClass::ConstantZero);
  CHECK(classify_j(*C, x, zero) == JClass::Constant1728);
  CHECK(classify_j(*C, scaled(power(*C, x, 2), 3), power(*C, x, 3)) == JClass::ConstantOther);
  CHECK(classify_j(*C, x, one) == JClass::Nonconstant);
  CHECK(kind_of([&] { classify_j(*C, zero, zero); }) == ErrorKind::DegenerateDisc);
}

TEST_CASE("Weierstrass data validation") {
  const CurvePtr C = genus2_split_curve(101);
  const PrimeField& F = C->field();
  const FunctionRep zero = FunctionRep::constant(F, 0);
  const Divisor L2 = Divisor::at_infinity(C, 2);
  // x^3 is not a section of 4 inf
  CHECK(kind_of([&] {
          invariants_from_weierstrass({C, Divisor::at_infinity(C, 1), FunctionRep(Poly::x(F).pow(3)), FunctionRep::constant(F, 1), {}, {}});
        }) == ErrorKind::NotSection);
  CHECK(kind_of([&] { invariants_from_weierstrass({C, L2, zero, zero, {}, {}}); }) == ErrorKind::DegenerateDisc);
  // B = (x - r)^6 vanishes to order 6 at both places over a split r
  const Residue r = split_x_values(*C).front();
  CHECK(kind_of([&] {
          invariants_from_weierstrass({C, L2, zero, FunctionRep(Poly::linear(F, r).pow(6)), {}, {}});
        }) == ErrorKind::NotMinimal);
}

TEST_CASE("the degree-5 counterexample") {
  const CurvePtr C = genus2_curve(101);
  const Poly a = random_split_cubic(*C, 5);
  const WeierstrassData W = build_d5_example(C, a);
  const SurfaceInvariants i = invariants_from_weierstrass(W);
  CHECK(i.d == 5);
  CHECK(i.s == 6);
  CHECK(i.p_g() == 6);
  CHECK(i.h0_Linv_Delta == 1);
  const Verdict v = torelli_decide(W, i, true);
  CHECK(v.outcome == Outcome::Fails);
  CHECK(v.rule == "ThmCounter/lemKosNonVanA");
  REQUIRE(v.mu_corank.has_value());
  CHECK(*v.mu_corank >= 1);
  const PrimeField& F = C->field();
  CHECK(kind_of([&] { build_d5_example(C, Poly::linear(F, 2).pow(3)); }) == ErrorKind::BadCubic);
  CHECK(kind_of([&] { build_d5_example(C, Poly::linear(F, 2)); }) == ErrorKind::BadCubic);
  // -1 is the Weierstrass x-coordinate of x^5 + 1
  CHECK(kind_of([&] {
          build_d5_example(C, Poly::linear(F, 100) * Poly::linear(F, 2) * Poly::linear(F, 4));
        }) == ErrorKind::BadCubic);
}

TEST_CASE("the degree-1 twist") {
  const CurvePtr C = genus2_split_curve(101);
  const WeierstrassData W = build_twist_example(C, 7);
  const SurfaceInvariants i = invariants_from_weierstrass(W);
  CHECK(i.d == 1);
  CHECK(i.h0_L == 0);
  CHECK(i.j_class == JClass::Nonconstant);
  expect(i, Outcome::Holds, "R3", "mainThm");
  const WeierstrassData again = build_twist_example(C, 7);
  CHECK(again.A == W.A);
  CHECK(again.B == W.B);
  CHECK(kind_of([] { build_twist_example(genus2_curve(103), 1); }) == ErrorKind::NoTwistFound);
}

TEST_CASE("fiber bundle check on genus 1") {
  const CurvePtr E = genus1_curve(101);
  const Divisor T = Divisor::point(E, Place::affine(100, 0)) - Divisor::at_infinity(E, 1);
  CHECK(torsion_order(E, T) == 2);
  const Verdict v = fiber_bundle_check(E, T);
  CHECK(v.outcome == Outcome::Fails);
  CHECK(v.mu_rank == 0);
  CHECK(v.mu_target == 1);
  CHECK(kind_of([&] { fiber_bundle_check(E, Divisor(E)); }) == ErrorKind::TrivialClass);
  CHECK(kind_of([&] { fiber_bundle_check(E, Divisor::at_infinity(E, 1)); }) == ErrorKind::NotTorsion);
  // The bundle surface built from T agrees with the direct check.
  const WeierstrassData W = fiber_bundle_instance(E, 100, 1, 1);
  const Verdict w = torelli_decide(W, true);
  CHECK(w.rule == "fiberBundleCor:g1");
  CHECK(w.mu_corank == 1);
}

TEST_CASE("rules and mu agree on random constant-j surfaces") {
  std::mt19937_64 rng(2024);
  const CurvePtr C = genus2_split_curve(101);
  int decided = 0;
  for (int t = 0; t < 30; ++t) {
    const JClass j = t % 3 == 0 ? JClass::ConstantZero : t % 3 == 1 ? JClass::Constant1728 : JClass::ConstantOther;
    const int d = 1 + t % 4;
    const auto recipe = random_constant_j_recipe(*C, j, d, d == 1 || t % 2 == 0, rng);
    if (!recipe) continue;
    const Verdict v = torelli_decide(constant_j_instance(C, *recipe), true);
    CHECK(v.outcome != Outcome::EquivalentToMu);
    decided += v.mu_rank ? 1 : 0;
  }
  CHECK(decided > 0);
}
