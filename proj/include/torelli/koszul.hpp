#pragma once

#include <cstddef>

#include "torelli/matrix.hpp"
#include "torelli/rrspace.hpp"

namespace torelli {

/// Multiplication H0(D1) x H0(D2) -> H0(D1 + D2). Column i * right.dim() + j is
/// the coordinate vector of left.basis()[i] * right.basis()[j].
struct MultMap {
  RRSpace left;
  RRSpace right;
  RRSpace target;
  Matrix matrix;
  std::size_t rank = 0;

  bool surjective() const noexcept { return static_cast<int>(rank) == target.dim(); }
  int corank() const noexcept { return target.dim() - static_cast<int>(rank); }
};

MultMap mult_map(const CurvePtr& C, const Divisor& D1, const Divisor& D2);

/// Coordinates of u * v in T, where u, v are given by basis indices of U and V
/// and T = L(U.divisor() + V.divisor()). Errors: InternalBoundError.
std::vector<Residue> product_coordinates(const HyperellipticCurve& C, const RRSpace& U,
                                         std::size_t i, const RRSpace& V, std::size_t j,
                                         const RRSpace& T);

inline constexpr std::size_t kDefaultKoszulCap = 1'000'000;

/// dim K_{p,q}(C, F, L): middle cohomology of
///   wedge^{p+1} V (x) W_{q-1} -> wedge^p V (x) W_q -> wedge^{p-1} V (x) W_{q+1}
/// with V = H0(L), W_k = H0(F + k L).
struct KoszulSlot {
  int p = 0;
  int q = 0;
  Divisor F;
  Divisor L;
  int dim = 0;
  int incoming_rank = 0;
  int kernel_dim = 0;
};

/// Errors: SizeCapExceeded when a differential has more than `cap` entries;
/// InternalBoundError if consecutive differentials do not compose to zero.
KoszulSlot koszul_dim(const CurvePtr& C, int p, int q, const Divisor& F, const Divisor& L,
                      std::size_t cap = kDefaultKoszulCap);

/// |dim K_{p,q}(C, O, L) - dim K_{r-1-p, 2-q}(C, K, L)| with r = h0(L) - 1.
/// Errors: NotBasePointFree.
int duality_defect(const CurvePtr& C, int p, int q, const Divisor& L,
                   std::size_t cap = kDefaultKoszulCap);

struct MuResult {
  bool surjective = false;
  int corank = 0;
  int rank = 0;
  int left_dim = 0;    // h0(K + L)
  int right_dim = 0;   // h0(K - L + Delta)
  int target_dim = 0;  // h0(2K + Delta)
};

/// H0(K + L) x H0(K - L + Delta) -> H0(2K + Delta).
/// Errors: NotReduced when Delta has a coefficient other than 0 or 1.
MuResult mu_pi(const CurvePtr& C, const Divisor& L, const Divisor& Delta);

}  // namespace torelli
