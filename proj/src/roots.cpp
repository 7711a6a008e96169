#include "torelli/roots.hpp"

#include <algorithm>
#include <random>

#include "torelli/error.hpp"

namespace torelli {
namespace {

constexpr int kSplitAttempts = 64;
constexpr std::uint32_t kExhaustiveLimit = 10000;

void scan_roots(const Poly& g, std::vector<Residue>& out) {
  for (std::uint32_t r = 0; r < g.field().prime(); ++r) {
    if (g.eval(r) == 0) out.push_back(r);
  }
}

// g is monic, squarefree and a product of distinct linear factors.
void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<Residue>& out) {
  const PrimeField& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(F.neg(g.coeff(0)));
    return;
  }
  const std::uint64_t half = (F.prime() - 1) / 2;
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    const Residue a = static_cast<Residue>(rng() % F.prime());
    Poly probe = pow_mod(Poly(F, {a, 1}), half, g) - Poly::constant(F, 1);
    Poly h = gcd(g, probe);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, rng, out);
      split_linear(g / h, rng, out);
      return;
    }
  }
  if (F.prime() <= kExhaustiveLimit) {
    scan_roots(g, out);
    return;
  }
  throw Error(ErrorKind::InternalBoundError, "equal-degree splitting did not converge");
}

}  // namespace

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

RootSet poly_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly_roots of the zero polynomial");
  const PrimeField& F = f.field();
  RootSet result;
  if (f.degree() == 0) {
    result.splits = true;
    return result;
  }
  const Poly m = f.monic();
  // Product of the distinct rational linear factors.
  const Poly x = Poly::x(F);
  const Poly g = gcd(m, pow_mod(x, F.prime(), m) - x);

  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (Residue c : m.coeffs()) seed = seed * 1000003ULL + c;
  std::mt19937_64 rng(seed);

  std::vector<Residue> values;
  split_linear(g, rng, values);
  std::sort(values.begin(), values.end());

  int total = 0;
  for (Residue r : values) {
    const int k = m.root_order(r);
    result.roots.push_back({r, k});
    total += k;
  }
  result.splits = total == f.degree();
  return result;
}

}  // namespace torelli
