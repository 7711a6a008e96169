#include "torelli/torelli.hpp"

#include <random>
#include <set>

#include "torelli/error.hpp"
#include "torelli/roots.hpp"

namespace torelli {

const char* to_string(JClass j) {
  switch (j) {
    case JClass::Nonconstant: return "Nonconstant";
    case JClass::ConstantZero: return "ConstantZero";
    case JClass::Constant1728: return "Constant1728";
    case JClass::ConstantOther: return "ConstantOther";
  }
  return "?";
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::EquivalentToMu: return "EquivalentToMu";
    case Outcome::ConjecturallyFails: return "ConjecturallyFails";
    case Outcome::OutOfScope: return "OutOfScope";
  }
  return "?";
}

namespace {

// c with u = c * v, when it exists. Both arguments nonzero and canonical.
std::optional<Residue> proportional(const FunctionRep& u, const FunctionRep& v) {
  if (!(u.den() == v.den())) return std::nullopt;
  const PrimeField& F = u.field();
  const Poly& ref = v.a().is_zero() ? v.b() : v.a();
  const Poly& num = v.a().is_zero() ? u.b() : u.a();
  if (num.is_zero()) return std::nullopt;
  const Residue c = F.div(num.lead(), ref.lead());
  if (u.a() == v.a().scaled(c) && u.b() == v.b().scaled(c)) return c;
  return std::nullopt;
}

void require_section(const CurvePtr& C, const FunctionRep& phi, const Divisor& D,
                     const char* name) {
  if (phi.is_zero()) return;
  // phi can only violate div(phi) + D >= 0 at its poles or on the support of D.
  std::set<Place> check{Place::infinity()};
  for (const auto& P : D.support()) check.insert(P);
  if (phi.den().degree() > 0) {
    Poly rest = phi.den();
    for (const auto& r : poly_roots(phi.den()).roots) {
      const auto places = C->places_over(r.value);
      if (places.empty()) {
        throw Error(ErrorKind::NotSection, std::string(name) + " has a pole over x = " +
                                               std::to_string(r.value));
      }
      check.insert(places.begin(), places.end());
      rest = rest / Poly::linear(C->field(), r.value).pow(static_cast<unsigned>(r.multiplicity));
    }
    if (rest.degree() > 0) {
      throw Error(ErrorKind::NotSection, std::string(name) + " has a pole at a non-rational place");
    }
  }
  for (const auto& P : check) {
    const int v = valuation(*C, phi, P);
    if (v + D.coeff(P) < 0) {
      throw Error(ErrorKind::NotSection, std::string(name) + " is not a section of " +
                                             D.to_string() + " at " + P.to_string());
    }
  }
}

std::optional<bool> try_very_ample(const CurvePtr& C, const Divisor& D) {
  try {
    return is_very_ample(C, D);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Inconclusive) return std::nullopt;
    throw;
  }
}

Verdict make(Outcome o, const char* id, const char* tag, std::string reason) {
  Verdict v;
  v.outcome = o;
  v.rule_id = id;
  v.rule = tag;
  v.reason = std::move(reason);
  return v;
}

bool is_constant(JClass j) { return j != JClass::Nonconstant; }

bool eq(const std::optional<int>& v, int x) { return v && *v == x; }
bool positive(const std::optional<int>& v) { return v && *v > 0; }

}  // namespace

JClass classify_j(const HyperellipticCurve& C, const FunctionRep& A, const FunctionRep& B) {
  if (A.is_zero() && B.is_zero()) throw Error(ErrorKind::DegenerateDisc, "A = B = 0");
  if (A.is_zero()) return JClass::ConstantZero;
  if (B.is_zero()) return JClass::Constant1728;
  const FunctionRep A3 = power(C, A, 3);
  const FunctionRep B2 = power(C, B, 2);
  return proportional(A3, B2) ? JClass::ConstantOther : JClass::Nonconstant;
}

FunctionRep discriminant(const HyperellipticCurve& C, const FunctionRep& A, const FunctionRep& B) {
  return scaled(power(C, A, 3), 4) + scaled(power(C, B, 2), 27);
}

SurfaceInvariants invariants_from_weierstrass(const WeierstrassData& W) {
  const CurvePtr& C = W.curve;
  const HyperellipticCurve& curve = *C;
  if (!(W.L.curve() == curve)) throw Error(ErrorKind::CurveMismatch, "L is on another curve");
  if (W.L.degree() < 0) throw Error(ErrorKind::InconsistentInvariants, "deg L < 0");
  require_section(C, W.A, 4 * W.L, "A");
  require_section(C, W.B, 6 * W.L, "B");
  const JClass j = classify_j(curve, W.A, W.B);
  const FunctionRep disc = discriminant(curve, W.A, W.B);
  if (disc.is_zero()) throw Error(ErrorKind::DegenerateDisc, "4A^3 + 27B^2 = 0");

  const Divisor disc_div = divisor_of_function(C, disc) + 12 * W.L;
  if (!disc_div.is_effective()) {
    throw Error(ErrorKind::InternalBoundError, "discriminant divisor is not effective");
  }
  for (const auto& P : disc_div.support()) {
    const int va = W.A.is_zero() ? kInfiniteValuation : valuation(curve, W.A, P) + 4 * W.L.coeff(P);
    const int vb = W.B.is_zero() ? kInfiniteValuation : valuation(curve, W.B, P) + 6 * W.L.coeff(P);
    if (va >= 4 && vb >= 6) {
      throw Error(ErrorKind::NotMinimal, "A and B vanish to orders " +
                                             (va == kInfiniteValuation ? std::string("inf") : std::to_string(va)) +
                                             ", " +
                                             (vb == kInfiniteValuation ? std::string("inf") : std::to_string(vb)) +
                                             " at " + P.to_string());
    }
  }

  SurfaceInvariants inv;
  inv.g = curve.genus();
  inv.d = W.L.degree();
  inv.delta = reduce_support(disc_div);
  inv.s = static_cast<int>(inv.delta->terms().size());
  inv.j_class = j;
  inv.h0_L = h0(C, W.L);
  inv.h0_Linv_Delta = h0(C, *inv.delta - W.L);
  inv.h0_L2inv_Delta = h0(C, *inv.delta - 2 * W.L);
  inv.L_trivial = inv.d == 0 && *inv.h0_L == 1;
  inv.L2_is_Delta = inv.s == 2 * inv.d && *inv.h0_L2inv_Delta == 1;
  inv.h1_parity = W.h1_parity;
  inv.clifford = W.clifford;
  const Divisor K = canonical_divisor(C);
  inv.very_ample_KL = try_very_ample(C, K + W.L);
  inv.very_ample_KLinvDelta = try_very_ample(C, K - W.L + *inv.delta);
  return inv;
}

void check_invariants(const SurfaceInvariants& inv) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::InconsistentInvariants, why); };
  if (inv.g < 0) bad("g < 0");
  if (inv.d < 0) bad("d < 0");
  if (inv.s < 0) bad("s < 0");
  if (inv.d >= 1 && inv.s < inv.d + 1) {
    bad("s = " + std::to_string(inv.s) + " < d + 1 = " + std::to_string(inv.d + 1));
  }
  if (is_constant(inv.j_class) && 5 * inv.s < 6 * inv.d) {
    bad("constant j needs s >= 6d/5, got s = " + std::to_string(inv.s) + ", d = " +
        std::to_string(inv.d));
  }
  if (!is_constant(inv.j_class) && inv.d < 1) bad("nonconstant j needs d >= 1");
  if (inv.L_trivial && inv.d != 0) bad("trivial L must have degree 0");
  if (inv.clifford && *inv.clifford < 0) bad("negative Clifford index");
}

bool reduction_applies(const SurfaceInvariants& inv) {
  return is_constant(inv.j_class) &&
         (inv.d >= 3 || (inv.d == 2 && inv.g > 0) || (inv.d == 1 && eq(inv.h0_L, 0)));
}

Verdict torelli_verdict(const SurfaceInvariants& inv) {
  check_invariants(inv);
  const int g = inv.g;
  const int d = inv.d;
  const int s = inv.s;
  const bool cst = is_constant(inv.j_class);

  // R0: rational surfaces (d = 1) and products E x P^1 (d = 0).
  if (g == 0 && (d == 0 || d == 1)) {
    return make(Outcome::Fails, "R0", "rationalOrProduct",
                d == 0 ? "product of an elliptic curve with P^1" : "rational elliptic surface");
  }
  // R1: K3 surfaces.
  if (g == 0 && d == 2) return make(Outcome::Holds, "R1", "mainThmCst(1):K3", "elliptic K3 surface");
  // R2a: a theorem, so it precedes the conjectural R2.
  if (g == 1 && (d == 1 || d == 2) && inv.j_class == JClass::ConstantOther) {
    return make(Outcome::Fails, "R2a", "constJCounterG1",
                "g = 1, d in {1,2}, constant j other than 0 and 1728");
  }
  if (d == 1 && positive(inv.h0_L) && g >= 1) {
    return make(Outcome::ConjecturallyFails, "R2", "conjecture:d1-effective",
                "d = 1 and L effective, so the canonical system has a base point");
  }
  if (!cst && (d >= 2 || (d == 1 && eq(inv.h0_L, 0)))) {
    return make(Outcome::Holds, "R3", "mainThm", "nonconstant j");
  }
  if (d == 0 && inv.L_trivial && inv.h1_parity == Parity::Odd) {
    if (g >= 2) return make(Outcome::Fails, "R4", "fiberBundleRemark:h1-odd", "principal bundle, h1 odd, g >= 2");
    if (g == 1) return make(Outcome::Holds, "R4", "fiberBundleRemark:h1-odd", "principal bundle, h1 odd, g = 1");
  }
  if (d == 0 && (!inv.L_trivial || inv.h1_parity == Parity::Even)) {
    if (g == 1 && !inv.L_trivial) {
      return make(Outcome::Fails, "R5", "fiberBundleCor:g1",
                  "g = 1 and L nontrivial torsion: H0(K + L) = 0");
    }
    return make(Outcome::EquivalentToMu, "R5", "fiberBundleThm", "fiber bundle: decided by mu with Delta = 0");
  }
  if (cst) {
    // R6: s = d + 1 and L^{-1}(Delta) effective.
    if (s == d + 1 && positive(inv.h0_Linv_Delta) && (g != 0 || d >= 3) &&
        (d != 1 || eq(inv.h0_L, 0))) {
      return make(Outcome::Fails, "R6", "ThmCounter/lemKosNonVanA",
                  "s = d + 1 and h0(L^-1(Delta)) > 0: the point of L^-1(Delta) is a base point of the image of mu");
    }
    // R7
    if (d == 2 && g == 1 && inv.L2_is_Delta == true) {
      return make(Outcome::Fails, "R7", "ThmCounter/lemKosNonVanB",
                  "g = 1, d = 2, L^2 ~ Delta: mu factors through Sym^2 H0(L)");
    }
    if (reduction_applies(inv)) {
      const int cliff = inv.effective_clifford();
      auto hold = [&](const char* tag, std::string why, bool assumed) {
        Verdict v = make(Outcome::Holds, "R8", tag, std::move(why));
        v.assumption_dependent = assumed;
        return v;
      };
      if (d >= 3 && s >= d + 2) return hold("lemKosVanA(1)", "d >= 3 and s >= d + 2", false);
      // d = 1, s = 4 needs h1(L^-2(Delta)) <= g - 2. On a hyperelliptic curve the
      // degree-2 bundle L^-2(Delta) can be the g^1_2, where h1 = g - 1.
      const bool g12_gap = d == 1 && s == 4 && cliff == 0 && !(inv.h0_L2inv_Delta && *inv.h0_L2inv_Delta <= 1);
      if ((d == 1 || d == 2) && s >= d + 3 && !g12_gap) {
        return hold("lemKosVanA(2)", "d in {1,2} and s >= d + 3", false);
      }
      if ((d == 1 || d == 2) && s == d + 2 && eq(inv.h0_L2inv_Delta, 0)) {
        return hold("lemKosVanA(3)", "d in {1,2}, s = d + 2, h0(L^-2(Delta)) = 0", false);
      }
      const bool cliff_ok = (g >= 2 && cliff >= 2) || (g >= 3 && 4 - d <= cliff && cliff <= 1);
      const bool ample_ok = d >= 3 || inv.very_ample_KL == true || inv.very_ample_KLinvDelta == true;
      if (s == d + 1 && eq(inv.h0_Linv_Delta, 0) && cliff_ok && ample_ok &&
          (d != 1 || eq(inv.h0_L, 0))) {
        return hold("lemKosVanB", "s = d + 1, h0(L^-1(Delta)) = 0, Clifford index " +
                                       std::to_string(cliff), inv.clifford.has_value());
      }
      if (d == 2 && inv.L2_is_Delta == true && cliff >= 1 && eq(inv.h0_Linv_Delta, 0)) {
        return hold("lemKosVanC", "d = 2, L^2 ~ Delta, h0(L^-1(Delta)) = 0, Clifford index " +
                                       std::to_string(cliff), inv.clifford.has_value());
      }
      if (d == 1 && s == 3 && eq(inv.h0_L, 0) && positive(inv.h0_L2inv_Delta) && cliff >= 2 &&
          eq(inv.h0_Linv_Delta, 0)) {
        return hold("lemKosVanD", "d = 1, s = 3, h0(L^-2(Delta)) > 0, h0(L^-1(Delta)) = 0, Clifford index " +
                                       std::to_string(cliff), inv.clifford.has_value());
      }
      return make(Outcome::EquivalentToMu, "R9", "prpRedKos",
                  "constant j: Torelli holds iff mu is surjective");
    }
  }
  std::string why = "no rule applies";
  if (d == 0 && inv.L_trivial && !inv.h1_parity) why = "principal bundle: h1 parity required";
  return make(Outcome::OutOfScope, "R10", "out-of-scope", why);
}

Verdict torelli_decide(const WeierstrassData& W, bool compute_mu) {
  return torelli_decide(W, invariants_from_weierstrass(W), compute_mu);
}

Verdict torelli_decide(const WeierstrassData& W, const SurfaceInvariants& inv, bool compute_mu) {
  Verdict v = torelli_verdict(inv);
  if (!compute_mu) return v;
  const bool bundle = inv.d == 0 && !inv.L_trivial;
  const bool mu_decides = reduction_applies(inv) || bundle ||
                          (inv.d == 0 && inv.h1_parity == Parity::Even);
  const bool ruled = v.outcome == Outcome::Holds || v.outcome == Outcome::Fails;
  if (!(v.outcome == Outcome::EquivalentToMu || (ruled && mu_decides))) return v;

  const Divisor delta = inv.d == 0 ? Divisor(W.curve) : *inv.delta;
  const MuResult mu = mu_pi(W.curve, W.L, delta);
  v.mu_corank = mu.corank;
  v.mu_rank = mu.rank;
  v.mu_target = mu.target_dim;
  const Outcome computed = mu.surjective ? Outcome::Holds : Outcome::Fails;
  if (v.outcome == Outcome::EquivalentToMu) {
    v.outcome = computed;
    v.reason += mu.surjective ? "; mu is surjective" : "; mu has corank " + std::to_string(mu.corank);
  } else if (v.outcome != computed) {
    throw Error(ErrorKind::OracleMismatch, "rule " + v.rule_id + " (" + v.rule + ") says " +
                                               to_string(v.outcome) + " but mu has corank " +
                                               std::to_string(mu.corank));
  }
  return v;
}

std::optional<int> torsion_order(const CurvePtr& C, const Divisor& T, int max_order) {
  if (T.degree() != 0) return std::nullopt;
  for (int k = 1; k <= max_order; ++k) {
    if (h0(C, k * T) > 0) return k;
  }
  return std::nullopt;
}

Verdict fiber_bundle_check(const CurvePtr& C, const Divisor& T) {
  if (T.degree() != 0) {
    throw Error(ErrorKind::NotTorsion, "T has degree " + std::to_string(T.degree()));
  }
  const auto order = torsion_order(C, T, 6);
  if (order == 1) throw Error(ErrorKind::TrivialClass, T.to_string() + " is principal");
  if (!order || *order == 5) {
    throw Error(ErrorKind::NotTorsion, T.to_string() + " does not have order 2, 3, 4 or 6");
  }
  const MuResult mu = mu_pi(C, T, Divisor(C));
  Verdict v;
  v.mu_corank = mu.corank;
  v.mu_rank = mu.rank;
  v.mu_target = mu.target_dim;
  v.rule_id = "R5";
  if (C->genus() == 1) {
    v.outcome = Outcome::Fails;
    v.rule = "fiberBundleCor:g1";
    v.reason = "g = 1, L of order " + std::to_string(*order) + ": H0(K + L) = 0";
    if (mu.surjective) {
      throw Error(ErrorKind::OracleMismatch, "mu surjective on a genus 1 fiber bundle");
    }
  } else {
    v.outcome = mu.surjective ? Outcome::Holds : Outcome::Fails;
    v.rule = "fiberBundleThm";
    v.reason = "L of order " + std::to_string(*order) +
               (mu.surjective ? "; mu is surjective" : "; mu has corank " + std::to_string(mu.corank));
  }
  return v;
}

WeierstrassData build_d5_example(const CurvePtr& C, const Poly& a) {
  const HyperellipticCurve& curve = *C;
  if (a.degree() != 3) throw Error(ErrorKind::BadCubic, "degree " + std::to_string(a.degree()));
  const RootSet rs = poly_roots(a);
  if (!rs.splits || rs.roots.size() != 3) {
    throw Error(ErrorKind::BadCubic, a.to_string() + " does not have 3 distinct rational roots");
  }
  for (const auto& r : rs.roots) {
    const auto places = curve.places_over(r.value);
    if (places.size() != 2) {
      throw Error(ErrorKind::BadCubic, "root " + std::to_string(r.value) +
                                           (places.empty() ? " has no rational places"
                                                           : " is a Weierstrass x-coordinate"));
    }
  }
  const PrimeField& F = curve.field();
  const Poly m = a.monic();
  return WeierstrassData{C, Divisor::at_infinity(C, 5), FunctionRep(Poly(F)), FunctionRep(m.pow(5)),
                         std::nullopt, std::nullopt};
}

WeierstrassData build_twist_example(const CurvePtr& C, std::uint64_t seed) {
  const HyperellipticCurve& curve = *C;
  const auto W = weierstrass_places(curve);
  if (W.size() < 3) {
    throw Error(ErrorKind::NoTwistFound, "need at least 3 rational Weierstrass places, found " +
                                             std::to_string(W.size()));
  }
  const Place p = Place::infinity();
  std::optional<Divisor> L;
  for (std::size_t i = 0; i < W.size() && !L; ++i) {
    for (std::size_t j = 0; j < W.size() && !L; ++j) {
      if (i == j) continue;
      Divisor cand = Divisor::point(C, p) + Divisor::point(C, W[i]) - Divisor::point(C, W[j]);
      if (h0(C, cand) == 0) L = cand;
    }
  }
  if (!L) throw Error(ErrorKind::NoTwistFound, "every twist of inf by a Weierstrass difference is effective");

  // e1 + e2 + e3 = 0 in L(2L): x^3 + A x + B = (x - e1)(x - e2)(x - e3) and
  // disc = -prod (ei - ej)^2, which splits whenever each difference does.
  const RRSpace V = rr_basis(C, 2 * *L);
  const PrimeField& F = curve.field();
  std::mt19937_64 rng(seed);
  auto random_section = [&]() {
    FunctionRep e = FunctionRep::constant(F, 0);
    for (const auto& b : V.basis()) e = e + scaled(b, static_cast<Residue>(rng() % F.prime()));
    return e;
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    const FunctionRep e1 = random_section();
    const FunctionRep e2 = random_section();
    const FunctionRep e3 = -(e1 + e2);
    const FunctionRep A = multiply(curve, e1, e2) + multiply(curve, e1, e3) + multiply(curve, e2, e3);
    const FunctionRep B = -multiply(curve, multiply(curve, e1, e2), e3);
    WeierstrassData out{C, *L, A, B, std::nullopt, std::nullopt};
    try {
      const SurfaceInvariants inv = invariants_from_weierstrass(out);
      if (inv.j_class == JClass::Nonconstant) return out;
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::NonSplitSupport:
        case ErrorKind::DegenerateDisc:
        case ErrorKind::NotMinimal:
          continue;
        default:
          throw;
      }
    }
  }
  throw Error(ErrorKind::RetryExhausted, "no split nonconstant-j twist in 100 attempts");
}

}  // namespace torelli
