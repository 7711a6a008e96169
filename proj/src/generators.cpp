#include "torelli/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "torelli/error.hpp"
#include "torelli/roots.hpp"

namespace torelli {

std::uint32_t example_prime() {
  const char* env = std::getenv("TORELLI_PRIME");
  if (!env || !*env) return 101;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v > 0xFFFFFFFFul) {
    throw Error(ErrorKind::BadPrime, std::string("TORELLI_PRIME=") + env);
  }
  return static_cast<std::uint32_t>(v);
}

namespace {

CurvePtr curve_from_roots(std::uint32_t p, int n) {
  const PrimeField F(p);
  Poly f = Poly::constant(F, 1);
  for (int r = 0; r < n; ++r) f *= Poly::linear(F, static_cast<Residue>(r));
  return make_curve(p, f);
}

template <typename T>
T take_random(std::vector<T>& pool, std::mt19937_64& rng) {
  const std::size_t i = rng() % pool.size();
  T v = pool[i];
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
  return v;
}

}  // namespace

CurvePtr genus1_curve(std::uint32_t p) { return make_curve(p, std::vector<std::int64_t>{4, 3, 0, 1}); }
CurvePtr genus2_curve(std::uint32_t p) { return make_curve(p, std::vector<std::int64_t>{1, 0, 0, 0, 0, 1}); }
CurvePtr genus2_split_curve(std::uint32_t p) { return curve_from_roots(p, 5); }
CurvePtr genus3_split_curve(std::uint32_t p) { return curve_from_roots(p, 7); }

std::vector<Residue> split_x_values(const HyperellipticCurve& C) {
  std::vector<Residue> out;
  for (Residue x = 0; x < C.prime(); ++x) {
    if (C.places_over(x).size() == 2) out.push_back(x);
  }
  return out;
}

std::vector<Residue> weierstrass_x_values(const HyperellipticCurve& C) {
  std::vector<Residue> out;
  for (const auto& r : poly_roots(C.f()).roots) out.push_back(r.value);
  return out;
}

WeierstrassData constant_j_instance(const CurvePtr& C, const ConstantJRecipe& recipe) {
  const HyperellipticCurve& curve = *C;
  const PrimeField& F = curve.field();
  Divisor L = Divisor::at_infinity(C, recipe.d);
  FunctionRep tau = FunctionRep::constant(F, 1);
  if (recipe.twist) {
    const auto [xa, xb] = *recipe.twist;
    L = L + Divisor::point(C, Place::affine(xa, 0)) - Divisor::point(C, Place::affine(xb, 0));
    tau = FunctionRep(Poly::linear(F, xb), Poly(F), Poly::linear(F, xa));
  }
  Poly psi = Poly::constant(F, 1);
  for (const auto& [r, m] : recipe.roots) psi *= Poly::linear(F, r).pow(static_cast<unsigned>(m));
  const FunctionRep psi_f(psi);
  const FunctionRep zero = FunctionRep::constant(F, 0);

  WeierstrassData W{C, L, zero, zero, std::nullopt, std::nullopt};
  switch (recipe.j) {
    case JClass::ConstantZero:
      W.B = multiply(curve, power(curve, tau, 3), psi_f);
      break;
    case JClass::Constant1728:
      W.A = multiply(curve, power(curve, tau, 2), psi_f);
      break;
    case JClass::ConstantOther: {
      const FunctionRep G = multiply(curve, tau, psi_f);
      W.A = scaled(power(curve, G, 2), recipe.lambda);
      W.B = scaled(power(curve, G, 3), recipe.mu);
      break;
    }
    case JClass::Nonconstant:
      throw std::invalid_argument("constant_j_instance needs a constant j class");
  }
  return W;
}

std::optional<ConstantJRecipe> random_constant_j_recipe(const HyperellipticCurve& C, JClass j,
                                                        int d, bool twist, std::mt19937_64& rng) {
  int k = 0, cap_split = 0, cap_w = 0;
  switch (j) {
    case JClass::ConstantZero: k = 6, cap_split = 5, cap_w = 2; break;
    case JClass::Constant1728: k = 4, cap_split = 3, cap_w = 1; break;
    case JClass::ConstantOther: k = 2, cap_split = 1, cap_w = 0; break;
    case JClass::Nonconstant: return std::nullopt;
  }
  ConstantJRecipe r;
  r.j = j;
  r.d = d;
  std::vector<Residue> wpool = weierstrass_x_values(C);
  std::vector<Residue> spool = split_x_values(C);
  if (twist) {
    if (wpool.size() < 2) return std::nullopt;
    const Residue a = take_random(wpool, rng);
    const Residue b = take_random(wpool, rng);
    r.twist = std::make_pair(a, b);
  }
  // psi lies in L(k d inf); minimality at infinity needs k d - 2 deg psi < k.
  const int lo = k * (d - 1) / 2 + 1;
  const int hi = k * d / 2;
  if (lo > hi) return std::nullopt;
  int remaining = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  while (remaining > 0) {
    const bool use_w = cap_w > 0 && !wpool.empty() && rng() % 4 == 0;
    if (use_w) {
      const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(cap_w, remaining)));
      r.roots.emplace_back(take_random(wpool, rng), m);
      remaining -= m;
    } else {
      if (spool.empty()) return std::nullopt;
      const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(cap_split, remaining)));
      r.roots.emplace_back(take_random(spool, rng), m);
      remaining -= m;
    }
  }
  std::sort(r.roots.begin(), r.roots.end());
  return r;
}

Poly random_split_cubic(const HyperellipticCurve& C, std::uint64_t seed) {
  std::vector<Residue> pool = split_x_values(C);
  if (pool.size() < 3) throw Error(ErrorKind::BadCubic, "fewer than 3 split x-values");
  std::mt19937_64 rng(seed);
  const PrimeField& F = C.field();
  Poly a = Poly::constant(F, 1);
  for (int i = 0; i < 3; ++i) a *= Poly::linear(F, take_random(pool, rng));
  return a;
}

WeierstrassData fiber_bundle_instance(const CurvePtr& C, Residue x_w, Residue alpha, Residue beta) {
  const HyperellipticCurve& curve = *C;
  const PrimeField& F = curve.field();
  const Place W = Place::affine(x_w, 0);
  curve.require_on_curve(W);
  const Divisor T = Divisor::point(C, W) - Divisor::at_infinity(C, 1);
  const Poly lin = Poly::linear(F, x_w);
  const FunctionRep A(Poly::constant(F, alpha), Poly(F), lin.pow(2));
  const FunctionRep B(Poly::constant(F, beta), Poly(F), lin.pow(3));
  return WeierstrassData{C, T, A, B, std::nullopt, std::nullopt};
}

}  // namespace torelli
