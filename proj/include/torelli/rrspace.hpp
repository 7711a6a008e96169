#pragma once

#include <optional>
#include <vector>

#include "torelli/divisor.hpp"
#include "torelli/matrix.hpp"

namespace torelli {

/// Basis of L(D) = { phi : div(phi) + D >= 0 }.
///
/// Every element is written as (a + b y) / c with the fixed denominator
/// c = den(). Basis element k has numerator numerators()[k] and a pole order at
/// infinity strictly larger than that of elements with smaller index.
class RRSpace {
 public:
  const Divisor& divisor() const noexcept { return divisor_; }
  const std::vector<FunctionRep>& basis() const noexcept { return basis_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }

  const Poly& den() const noexcept { return den_; }
  int max_deg_a() const noexcept { return max_a_; }
  int max_deg_b() const noexcept { return max_b_; }
  const std::vector<std::pair<Poly, Poly>>& numerators() const noexcept { return numerators_; }

  /// Coordinates of phi in basis(), or nullopt when phi is not in L(D).
  std::optional<std::vector<Residue>> coordinates(const FunctionRep& phi) const;
  /// Same for the element (a + b y) / den().
  std::optional<std::vector<Residue>> coordinates_of_numerator(const Poly& a, const Poly& b) const;

 private:
  friend RRSpace rr_basis(const CurvePtr& C, const Divisor& D);
  explicit RRSpace(Divisor D, Poly den) : divisor_(std::move(D)), den_(std::move(den)) {}

  std::vector<Residue> column_vector(const Poly& a, const Poly& b) const;

  Divisor divisor_;
  Poly den_;
  int max_a_ = -1;
  int max_b_ = -1;
  std::vector<FunctionRep> basis_;
  std::vector<std::pair<Poly, Poly>> numerators_;
  // Kernel basis in column space, and the free column that carries a 1 in each.
  std::vector<std::vector<Residue>> kernel_;
  std::vector<std::size_t> free_cols_;
  std::vector<std::size_t> a_col_;
  std::vector<std::size_t> b_col_;
  std::size_t ncols_ = 0;
};

/// Errors: CurveMismatch, InternalBoundError (Riemann-Roch violated).
RRSpace rr_basis(const CurvePtr& C, const Divisor& D);
int h0(const CurvePtr& C, const Divisor& D);
/// h0(K - D).
int h1(const CurvePtr& C, const Divisor& D);

/// D ~ E iff deg(D - E) = 0 and h0(D - E) = 1.
bool linearly_equivalent(const CurvePtr& C, const Divisor& D, const Divisor& E);

/// Errors: Inconclusive when a base point could sit over a non-rational x.
bool is_base_point_free(const CurvePtr& C, const Divisor& D);
/// Errors: Inconclusive when only rational places can be tested.
bool is_very_ample(const CurvePtr& C, const Divisor& D);

}  // namespace torelli
