#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torelli/field.hpp"
#include "torelli/poly.hpp"

namespace torelli {

/// A rational place of an odd-degree hyperelliptic curve: the unique point at
/// infinity or an affine point (x, y) with y^2 = f(x).
class Place {
 public:
  static Place infinity() { return Place(true, 0, 0); }
  static Place affine(Residue x, Residue y) { return Place(false, x, y); }

  bool is_infinity() const noexcept { return infinity_; }
  Residue x() const noexcept { return x_; }
  Residue y() const noexcept { return y_; }
  /// Ramification point of the x-map; infinity counts as one for odd models.
  bool is_weierstrass() const noexcept { return infinity_ || y_ == 0; }

  // Infinity sorts first, then affine points lexicographically.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.infinity_ != b.infinity_) return a.infinity_ ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.y_ <=> b.y_;
  }
  friend bool operator==(const Place&, const Place&) = default;

  std::string to_string() const;

 private:
  Place(bool inf, Residue x, Residue y) : infinity_(inf), x_(x), y_(y) {}

  bool infinity_;
  Residue x_;
  Residue y_;
};

/// y^2 = f(x) with f monic, squarefree, of odd degree 2g + 1 >= 3.
class HyperellipticCurve {
 public:
  HyperellipticCurve(std::uint32_t p, Poly f);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t prime() const noexcept { return field_.prime(); }
  const Poly& f() const noexcept { return f_; }
  int genus() const noexcept { return genus_; }

  bool contains(const Place& P) const;
  /// Throws Error(NotOnCurve) when P does not lie on the curve.
  void require_on_curve(const Place& P) const;

  /// Rational places over x0 (empty when f(x0) is a non-square).
  std::vector<Place> places_over(Residue x0) const;
  /// Infinity followed by every rational affine point.
  std::vector<Place> rational_places() const;
  /// The other sheet: (x, y) -> (x, -y); fixes Weierstrass places.
  Place conjugate(const Place& P) const;

  friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) {
    return a.field_ == b.field_ && a.f_ == b.f_;
  }

 private:
  PrimeField field_;
  Poly f_;
  int genus_;
};

using CurvePtr = std::shared_ptr<const HyperellipticCurve>;

/// Validated constructor. Errors: BadPrime, BadDegree, NotSquarefree.
CurvePtr make_curve(std::uint32_t p, const Poly& f);
CurvePtr make_curve(std::uint32_t p, const std::vector<std::int64_t>& f_coeffs);

/// Weierstrass places with rational coordinates: infinity plus (r, 0) for
/// each rational root r of f.
std::vector<Place> weierstrass_places(const HyperellipticCurve& C);

/// Element (a(x) + b(x) y) / den(x) of the function field, kept in canonical
/// form: gcd(a, b, den) = 1 and den monic. Zero is (0, 0, 1).
class FunctionRep {
 public:
  FunctionRep(Poly a, Poly b, Poly den);
  explicit FunctionRep(Poly a);

  static FunctionRep constant(const PrimeField& F, Residue c);
  static FunctionRep x(const PrimeField& F);
  static FunctionRep y(const PrimeField& F);

  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }
  const Poly& den() const noexcept { return den_; }
  const PrimeField& field() const noexcept { return a_.field(); }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const noexcept { return b_.is_zero() && a_.is_constant() && den_.degree() == 0; }

  /// Value at an affine point, or nullopt at a pole of the representation.
  std::optional<Residue> evaluate(Residue x, Residue y) const;

  std::string to_string() const;

  friend bool operator==(const FunctionRep&, const FunctionRep&) = default;

 private:
  Poly a_;
  Poly b_;
  Poly den_;
};

FunctionRep operator+(const FunctionRep& u, const FunctionRep& v);
FunctionRep operator-(const FunctionRep& u, const FunctionRep& v);
FunctionRep operator-(const FunctionRep& u);
FunctionRep scaled(const FunctionRep& u, Residue c);
/// (a + b y)(c + d y) = (ac + bd f) + (ad + bc) y over the product of denominators.
FunctionRep multiply(const HyperellipticCurve& C, const FunctionRep& u, const FunctionRep& v);
FunctionRep power(const HyperellipticCurve& C, const FunctionRep& u, unsigned e);
/// Throws Error(ZeroFunction) for u = 0.
FunctionRep inverse(const HyperellipticCurve& C, const FunctionRep& u);
/// Norm a^2 - b^2 f of the numerator a + b y.
Poly numerator_norm(const HyperellipticCurve& C, const Poly& a, const Poly& b);

/// Valuation reported for the zero function.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Order of vanishing of phi at P (negative for poles).
int valuation(const HyperellipticCurve& C, const FunctionRep& phi, const Place& P);
/// Valuation of a + b y at P (kInfiniteValuation when both are zero).
int numerator_valuation(const HyperellipticCurve& C, const Poly& a, const Poly& b,
                        const Place& P);
/// Valuation of a polynomial in x at P.
int x_poly_valuation(const HyperellipticCurve& C, const Poly& c, const Place& P);

}  // namespace torelli
