#include "torelli/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "torelli/simd/kernels.hpp"

namespace torelli {

Series series_mul(const PrimeField& F, const Series& a, const Series& b, std::size_t prec) {
  Series out(prec, 0);
  for (std::size_t i = 0; i < std::min(a.size(), prec); ++i) {
    if (a[i] == 0) continue;
    const std::size_t len = std::min(b.size(), prec - i);
    simd::axpy(std::span<Residue>(out).subspan(i, len), std::span<const Residue>(b).first(len),
               a[i], F.prime());
  }
  return out;
}

Series series_inverse(const PrimeField& F, const Series& a, std::size_t prec) {
  if (a.empty() || a[0] == 0) throw std::domain_error("series_inverse: zero constant term");
  Series u{F.inv(a[0])};
  std::size_t have = 1;
  while (have < prec) {
    have = std::min(2 * have, prec);
    Series au = series_mul(F, a, u, have);
    for (auto& v : au) v = F.neg(v);
    au[0] = F.add(au[0], 2);
    u = series_mul(F, u, au, have);
  }
  u.resize(prec, 0);
  return u;
}

Series series_sqrt(const PrimeField& F, const Series& a, Residue root0, std::size_t prec) {
  if (root0 == 0) throw std::domain_error("series_sqrt: zero leading root");
  const Residue half = F.inv(2);
  Series s{root0};
  std::size_t have = 1;
  while (have < prec) {
    have = std::min(2 * have, prec);
    Series quotient = series_mul(F, a, series_inverse(F, s, have), have);
    s.resize(have, 0);
    for (std::size_t i = 0; i < have; ++i) s[i] = F.mul(F.add(s[i], quotient[i]), half);
  }
  s.resize(prec, 0);
  return s;
}

Series y_expansion(const HyperellipticCurve& C, const Place& P, std::size_t prec) {
  if (P.is_weierstrass()) throw std::domain_error("y_expansion at a Weierstrass place");
  const Poly shifted = C.f().taylor_shift(P.x());
  Series fs(prec, 0);
  for (std::size_t i = 0; i < prec; ++i) fs[i] = shifted.coeff(i);
  return series_sqrt(C.field(), fs, P.y(), prec);
}

Series local_numerator(const PrimeField& F, const Poly& a, const Poly& b, Residue x0,
                       const Series& y_series, std::size_t prec) {
  const Poly as = a.taylor_shift(x0);
  const Poly bs = b.taylor_shift(x0);
  Series bser(prec, 0);
  for (std::size_t i = 0; i < prec; ++i) bser[i] = bs.coeff(i);
  Series out = series_mul(F, bser, y_series, prec);
  for (std::size_t i = 0; i < prec; ++i) out[i] = F.add(out[i], as.coeff(i));
  return out;
}

}  // namespace torelli
