#include "torelli/field.hpp"

#include <string>

#include "torelli/error.hpp"

namespace torelli {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 3 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::BadPrime, "modulus " + std::to_string(p) +
                                         " must be a prime with 3 < p < 2^31");
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1;
  Residue base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

bool PrimeField::is_square(Residue a) const noexcept {
  return a == 0 || pow(a, (p_ - 1) / 2) == 1;
}

std::optional<Residue> PrimeField::sqrt(Residue a) const {
  if (a == 0) return Residue{0};
  if (!is_square(a)) return std::nullopt;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
  // Tonelli-Shanks
  std::uint32_t q = p_ - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Residue z = 2;
  while (is_square(z)) ++z;
  Residue m = s;
  Residue c = pow(z, q);
  Residue t = pow(a, q);
  Residue r = pow(a, (q + 1) / 2);
  while (t != 1) {
    unsigned i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Residue b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace torelli
