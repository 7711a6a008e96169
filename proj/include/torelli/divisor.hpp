#pragma once

#include <map>
#include <string>
#include <vector>

#include "torelli/curve.hpp"

namespace torelli {

/// Finite integer combination of rational places on one curve.
class Divisor {
 public:
  explicit Divisor(CurvePtr curve);
  /// Zero coefficients are dropped; every place must lie on the curve.
  Divisor(CurvePtr curve, const std::map<Place, int>& terms);

  static Divisor point(CurvePtr curve, const Place& P, int multiplicity = 1);
  static Divisor at_infinity(CurvePtr curve, int multiplicity);

  const CurvePtr& curve_ptr() const noexcept { return curve_; }
  const HyperellipticCurve& curve() const noexcept { return *curve_; }

  const std::map<Place, int>& terms() const noexcept { return terms_; }
  int coeff(const Place& P) const;
  int degree() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_effective() const;
  std::vector<Place> support() const;

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;
  Divisor& operator+=(const Divisor& o) { return *this = *this + o; }
  Divisor& operator-=(const Divisor& o) { return *this = *this - o; }
  friend Divisor operator*(int k, const Divisor& D);

  friend bool operator==(const Divisor& a, const Divisor& b);

  std::string to_string() const;

 private:
  void require_same_curve(const Divisor& o) const;

  CurvePtr curve_;
  std::map<Place, int> terms_;
};

/// div(phi). Errors: ZeroFunction, NonSplitSupport.
Divisor divisor_of_function(const CurvePtr& C, const FunctionRep& phi);

/// (2g - 2) * infinity, the divisor of the differential dx / y.
Divisor canonical_divisor(const CurvePtr& C);

/// Clamps positive coefficients to 1. Errors: NotEffective.
Divisor reduce_support(const Divisor& D);

}  // namespace torelli
