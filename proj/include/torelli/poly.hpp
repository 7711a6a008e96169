#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "torelli/field.hpp"

namespace torelli {

/// Degree reported for the zero polynomial, standing in for minus infinity.
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial over F_p, coefficients in ascending degree with
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(PrimeField field) : field_(field) {}
  Poly(PrimeField field, std::vector<Residue> coeffs);

  static Poly from_ints(PrimeField field, const std::vector<std::int64_t>& coeffs);
  static Poly constant(PrimeField field, Residue c);
  static Poly monomial(PrimeField field, Residue c, std::size_t degree);
  static Poly x(PrimeField field) { return monomial(field, 1, 1); }
  /// x - r
  static Poly linear(PrimeField field, Residue r);

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Residue lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const Residue> coeffs() const noexcept { return c_; }

  Residue eval(Residue x) const noexcept;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(Residue c) const;
  Poly pow(unsigned e) const;
  /// Coefficients of this(x0 + t) as a polynomial in t.
  Poly taylor_shift(Residue x0) const;
  /// Multiplicity of x0 as a root (0 if not a root). Undefined for zero.
  int root_order(Residue x0) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);
/// True iff b divides a exactly.
bool divides(const Poly& b, const Poly& a);

}  // namespace torelli
