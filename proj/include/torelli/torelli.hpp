#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "torelli/koszul.hpp"

namespace torelli {

enum class JClass { Nonconstant, ConstantZero, Constant1728, ConstantOther };
enum class Parity { Even, Odd };
enum class Outcome { Holds, Fails, EquivalentToMu, ConjecturallyFails, OutOfScope };

const char* to_string(JClass j);
const char* to_string(Parity p);
const char* to_string(Outcome o);

/// y^2 = x^3 + A x + B over the function field, with A a section of 4L and B a
/// section of 6L.
struct WeierstrassData {
  CurvePtr curve;
  Divisor L;
  FunctionRep A;
  FunctionRep B;
  std::optional<Parity> h1_parity;
  std::optional<int> clifford;
};

struct SurfaceInvariants {
  int g = 0;
  int d = 0;
  int s = 0;
  std::optional<Divisor> delta;
  std::optional<int> h0_L;
  std::optional<int> h0_Linv_Delta;   // h0(Delta - L)
  std::optional<int> h0_L2inv_Delta;  // h0(Delta - 2L)
  JClass j_class = JClass::Nonconstant;
  bool L_trivial = false;
  /// L^2 ~ Delta.
  std::optional<bool> L2_is_Delta;
  std::optional<Parity> h1_parity;
  /// User-asserted Clifford index; hyperelliptic curves have index 0.
  std::optional<int> clifford;
  std::optional<bool> very_ample_KL;          // K + L
  std::optional<bool> very_ample_KLinvDelta;  // K - L + Delta

  /// Geometric genus g + d - 1 when L is nontrivial, g when it is trivial.
  int p_g() const noexcept { return L_trivial ? g : g + d - 1; }
  int effective_clifford() const noexcept { return clifford.value_or(0); }
};

struct Verdict {
  Outcome outcome = Outcome::OutOfScope;
  std::string rule_id;  // R0 .. R10
  std::string rule;     // citation tag
  std::string reason;
  std::optional<int> mu_corank;
  std::optional<int> mu_rank;
  std::optional<int> mu_target;
  bool assumption_dependent = false;
};

/// j-invariant class of y^2 = x^3 + A x + B. Errors: DegenerateDisc.
JClass classify_j(const HyperellipticCurve& C, const FunctionRep& A, const FunctionRep& B);

/// 4 A^3 + 27 B^2.
FunctionRep discriminant(const HyperellipticCurve& C, const FunctionRep& A, const FunctionRep& B);

/// Errors: NotSection, DegenerateDisc, NotMinimal, NonSplitSupport.
SurfaceInvariants invariants_from_weierstrass(const WeierstrassData& W);

/// Errors: InconsistentInvariants.
void check_invariants(const SurfaceInvariants& inv);

/// Rule engine. Rules are tried in the order R0, R1, R2a, R2, R3, ..., R10.
/// Errors: InconsistentInvariants.
Verdict torelli_verdict(const SurfaceInvariants& inv);

/// True when the constant-j reduction to mu applies: d >= 3, or d = 2 and
/// g > 0, or d = 1 and h0(L) = 0.
bool reduction_applies(const SurfaceInvariants& inv);

/// Rule verdict, plus a direct mu computation when requested. Errors: OracleMismatch.
Verdict torelli_decide(const WeierstrassData& W, bool compute_mu);
Verdict torelli_decide(const WeierstrassData& W, const SurfaceInvariants& inv, bool compute_mu);

/// Degree-1 twist by a difference of Weierstrass points with h0(L) = 0 and
/// nonconstant j. Errors: NoTwistFound, RetryExhausted.
WeierstrassData build_twist_example(const CurvePtr& C, std::uint64_t seed);

/// L = 5 inf, A = 0, B = a^5 for a cubic a with three split non-Weierstrass
/// roots. Errors: BadCubic.
WeierstrassData build_d5_example(const CurvePtr& C, const Poly& a);

/// Fiber bundle with fundamental class T of degree 0.
/// Errors: TrivialClass, NotTorsion.
Verdict fiber_bundle_check(const CurvePtr& C, const Divisor& T);

/// Order of T in the class group if it is at most `max_order`, else nullopt.
std::optional<int> torsion_order(const CurvePtr& C, const Divisor& T, int max_order = 12);

}  // namespace torelli
