#include "torelli/koszul.hpp"

#include <cstdint>
#include <cstdlib>
#include <unordered_map>

#include "torelli/error.hpp"

namespace torelli {

std::vector<Residue> product_coordinates(const HyperellipticCurve& C, const RRSpace& U,
                                         std::size_t i, const RRSpace& V, std::size_t j,
                                         const RRSpace& T) {
  const auto& [a1, b1] = U.numerators()[i];
  const auto& [a2, b2] = V.numerators()[j];
  // (a1 + b1 y)/c1 * (a2 + b2 y)/c2 with c1 c2 = q * cT.
  auto [q, rem] = divmod(U.den() * V.den(), T.den());
  std::optional<std::vector<Residue>> coords;
  if (rem.is_zero()) {
    const Poly a = a1 * a2 + b1 * b2 * C.f();
    const Poly b = a1 * b2 + a2 * b1;
    auto [na, ra] = divmod(a, q);
    auto [nb, rb] = divmod(b, q);
    if (ra.is_zero() && rb.is_zero()) coords = T.coordinates_of_numerator(na, nb);
  } else {
    coords = T.coordinates(multiply(C, U.basis()[i], V.basis()[j]));
  }
  if (!coords) {
    throw Error(ErrorKind::InternalBoundError,
                "product of sections is not in L(" + T.divisor().to_string() + ")");
  }
  return *coords;
}

MultMap mult_map(const CurvePtr& C, const Divisor& D1, const Divisor& D2) {
  RRSpace left = rr_basis(C, D1);
  RRSpace right = rr_basis(C, D2);
  RRSpace target = rr_basis(C, D1 + D2);
  const std::size_t nl = static_cast<std::size_t>(left.dim());
  const std::size_t nr = static_cast<std::size_t>(right.dim());
  Matrix M(C->field(), static_cast<std::size_t>(target.dim()), nl * nr);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      const auto v = product_coordinates(*C, left, i, right, j, target);
      for (std::size_t r = 0; r < v.size(); ++r) M.at(r, i * nr + j) = v[r];
    }
  }
  const std::size_t rk = rank(M);
  return MultMap{std::move(left), std::move(right), std::move(target), std::move(M), rk};
}

namespace {

// Strictly increasing k-subsets of {0..n-1} in lexicographic order, as bitmasks.
std::vector<std::uint64_t> subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << v;
    out.push_back(mask);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// d: wedge^p V (x) W -> wedge^{p-1} V (x) W', with
// s_I (x) t -> sum_k (-1)^k s_{I minus i_k} (x) (s_{i_k} t), k counted from 0.
Matrix differential(const HyperellipticCurve& C, int p, const RRSpace& V, const RRSpace& W,
                    const RRSpace& Wn, std::size_t cap) {
  const PrimeField& F = C.field();
  const int n = V.dim();
  const std::size_t cols = binom(n, p) * static_cast<std::size_t>(W.dim());
  const std::size_t rows = binom(n, p - 1) * static_cast<std::size_t>(Wn.dim());
  if (rows != 0 && cols > cap / rows) {
    throw Error(ErrorKind::SizeCapExceeded, "Koszul differential of size " + std::to_string(rows) +
                                                " x " + std::to_string(cols));
  }
  Matrix M(F, rows, cols);
  if (rows == 0 || cols == 0) return M;

  const auto src = subsets(n, p);
  const auto dst = subsets(n, p - 1);
  std::unordered_map<std::uint64_t, std::size_t> dst_index;
  for (std::size_t r = 0; r < dst.size(); ++r) dst_index.emplace(dst[r], r);

  // prod[i][j]: coordinates of V_i * W_j in Wn.
  const std::size_t w = static_cast<std::size_t>(W.dim());
  const std::size_t wn = static_cast<std::size_t>(Wn.dim());
  std::vector<std::vector<std::vector<Residue>>> prod(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      prod[i].push_back(product_coordinates(C, V, static_cast<std::size_t>(i), W, j, Wn));
    }
  }

  for (std::size_t s = 0; s < src.size(); ++s) {
    int k = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(src[s] & bit)) continue;
      const std::size_t row_block = dst_index.at(src[s] & ~bit) * wn;
      const bool negate = (k % 2) == 1;
      for (std::size_t j = 0; j < w; ++j) {
        const std::size_t col = s * w + j;
        const auto& v = prod[i][j];
        for (std::size_t m = 0; m < wn; ++m) {
          if (v[m] == 0) continue;
          Residue& cell = M.at(row_block + m, col);
          cell = negate ? F.sub(cell, v[m]) : F.add(cell, v[m]);
        }
      }
      ++k;
    }
  }
  return M;
}

}  // namespace

KoszulSlot koszul_dim(const CurvePtr& C, int p, int q, const Divisor& F, const Divisor& L,
                      std::size_t cap) {
  KoszulSlot slot{p, q, F, L, 0, 0, 0};
  if (p < 0) return slot;
  const RRSpace V = rr_basis(C, L);
  const int n = V.dim();
  if (p > n || n > 62) {
    if (n > 62) throw Error(ErrorKind::SizeCapExceeded, "h0(L) too large for wedge indexing");
    return slot;
  }
  const RRSpace Wprev = rr_basis(C, F + (q - 1) * L);
  const RRSpace W = rr_basis(C, F + q * L);
  const RRSpace Wnext = rr_basis(C, F + (q + 1) * L);

  const Matrix d_in = differential(*C, p + 1, V, Wprev, W, cap);
  const Matrix d_out = differential(*C, p, V, W, Wnext, cap);

  if (d_in.rows() > 0 && d_in.cols() > 0 && d_out.rows() > 0) {
    if (!(d_out * d_in).is_zero()) {
      throw Error(ErrorKind::InternalBoundError, "Koszul differentials do not compose to zero");
    }
  }
  const int middle = static_cast<int>(binom(n, p)) * W.dim();
  const int out_rank = static_cast<int>(rank(d_out));
  slot.incoming_rank = static_cast<int>(rank(d_in));
  slot.kernel_dim = middle - out_rank;
  slot.dim = slot.kernel_dim - slot.incoming_rank;
  if (slot.dim < 0) throw Error(ErrorKind::InternalBoundError, "negative Koszul dimension");
  return slot;
}

int duality_defect(const CurvePtr& C, int p, int q, const Divisor& L, std::size_t cap) {
  if (!is_base_point_free(C, L)) {
    throw Error(ErrorKind::NotBasePointFree, L.to_string() + " has a base point");
  }
  const int r = h0(C, L) - 1;
  const Divisor O(C);
  const int lhs = koszul_dim(C, p, q, O, L, cap).dim;
  const int rhs = koszul_dim(C, r - 1 - p, 2 - q, canonical_divisor(C), L, cap).dim;
  return std::abs(lhs - rhs);
}

MuResult mu_pi(const CurvePtr& C, const Divisor& L, const Divisor& Delta) {
  for (const auto& [P, k] : Delta.terms()) {
    if (k != 1) {
      throw Error(ErrorKind::NotReduced, "Delta has coefficient " + std::to_string(k) + " at " +
                                             P.to_string());
    }
  }
  const Divisor K = canonical_divisor(C);
  const MultMap m = mult_map(C, K + L, K - L + Delta);
  MuResult out;
  out.rank = static_cast<int>(m.rank);
  out.left_dim = m.left.dim();
  out.right_dim = m.right.dim();
  out.target_dim = m.target.dim();
  out.corank = m.corank();
  out.surjective = m.surjective();
  return out;
}

}  // namespace torelli
