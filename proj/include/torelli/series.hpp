#pragma once

#include <cstddef>
#include <vector>

#include "torelli/curve.hpp"

namespace torelli {

/// Truncated power series c[0] + c[1] t + ... ; length is the precision.
using Series = std::vector<Residue>;

Series series_mul(const PrimeField& F, const Series& a, const Series& b, std::size_t prec);
/// Newton iteration u <- u (2 - a u); needs a[0] != 0.
Series series_inverse(const PrimeField& F, const Series& a, std::size_t prec);
/// Newton iteration s <- (s + a / s) / 2 starting from s[0] = root0, root0^2 = a[0] != 0.
Series series_sqrt(const PrimeField& F, const Series& a, Residue root0, std::size_t prec);

/// y as a power series in t = x - x0 at a non-Weierstrass affine place.
Series y_expansion(const HyperellipticCurve& C, const Place& P, std::size_t prec);

/// Coefficients of (a(x0 + t) + b(x0 + t) * y_series) up to t^(prec - 1).
Series local_numerator(const PrimeField& F, const Poly& a, const Poly& b, Residue x0,
                       const Series& y_series, std::size_t prec);

}  // namespace torelli
