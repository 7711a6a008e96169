#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "torelli/torelli.hpp"

namespace torelli {

/// Prime used by the example constructors: TORELLI_PRIME if set, else 101.
std::uint32_t example_prime();

/// y^2 = x^3 + 3x + 4 = (x + 1)(x^2 - x + 4); (-1, 0) is a rational 2-torsion point.
CurvePtr genus1_curve(std::uint32_t p);
/// y^2 = x^5 + 1
CurvePtr genus2_curve(std::uint32_t p);
/// y^2 = x(x - 1)(x - 2)(x - 3)(x - 4)
CurvePtr genus2_split_curve(std::uint32_t p);
/// y^2 = x(x - 1)...(x - 6)
CurvePtr genus3_split_curve(std::uint32_t p);

/// x-values whose fibre consists of two distinct rational places.
std::vector<Residue> split_x_values(const HyperellipticCurve& C);
/// x-values of the affine Weierstrass places.
std::vector<Residue> weierstrass_x_values(const HyperellipticCurve& C);

/// Constant-j data on L = d inf + (w_a - w_b):
///   j = 0:     A = 0,          B = tau^3 psi
///   j = 1728:  A = tau^2 psi,  B = 0
///   other:     A = lambda G^2, B = mu G^3 with G = tau psi
/// where tau = (x - x_b)/(x - x_a) trivializes 2(w_a - w_b) and
/// psi = prod (x - r)^m.
struct ConstantJRecipe {
  JClass j = JClass::ConstantZero;
  int d = 1;
  std::optional<std::pair<Residue, Residue>> twist;  // affine Weierstrass x_a, x_b
  std::vector<std::pair<Residue, int>> roots;
  Residue lambda = 3;
  Residue mu = 1;
};

WeierstrassData constant_j_instance(const CurvePtr& C, const ConstantJRecipe& recipe);

/// A random minimal recipe for (j, d). Returns nullopt if the curve has too few
/// split x-values for the drawn configuration.
std::optional<ConstantJRecipe> random_constant_j_recipe(const HyperellipticCurve& C, JClass j,
                                                        int d, bool twist, std::mt19937_64& rng);

/// Cubic with three distinct split non-Weierstrass roots, chosen by the seed.
Poly random_split_cubic(const HyperellipticCurve& C, std::uint64_t seed);

/// Fiber bundle data with L = T = (x_w, 0) - inf of order 2:
/// A = alpha / (x - x_w)^2, B = beta / (x - x_w)^3.
WeierstrassData fiber_bundle_instance(const CurvePtr& C, Residue x_w, Residue alpha, Residue beta);

}  // namespace torelli
