#pragma once

#include <cstdint>
#include <optional>

namespace torelli {

/// Residue of the prime field, always reduced to [0, p).
using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for an odd prime 3 < p < 2^31.
class PrimeField {
 public:
  /// Throws Error(BadPrime) unless p is a prime with 3 < p < 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  bool is_square(Residue a) const noexcept;
  /// A square root of a, if one exists (Tonelli-Shanks).
  std::optional<Residue> sqrt(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace torelli
