#pragma once

#include <cstdint>
#include <vector>

#include "torelli/poly.hpp"

namespace torelli {

struct Root {
  Residue value;
  int multiplicity;
  friend bool operator==(const Root&, const Root&) = default;
};

struct RootSet {
  std::vector<Root> roots;  // ascending by value
  bool splits = false;      // true iff f is a product of linear factors over F_p
};

/// Rational roots of a nonzero polynomial with multiplicities.
/// Squarefree part, then gcd with x^p - x, then Cantor-Zassenhaus splitting
/// driven by a fixed-seed generator. Throws Error(ZeroPolynomial) on f = 0.
RootSet poly_roots(const Poly& f);

/// Squarefree test via gcd(f, f').
bool is_squarefree(const Poly& f);

}  // namespace torelli
