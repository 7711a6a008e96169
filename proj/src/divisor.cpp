#include "torelli/divisor.hpp"

#include "torelli/error.hpp"
#include "torelli/roots.hpp"

namespace torelli {

Divisor::Divisor(CurvePtr curve) : curve_(std::move(curve)) {}

Divisor::Divisor(CurvePtr curve, const std::map<Place, int>& terms) : curve_(std::move(curve)) {
  for (const auto& [P, k] : terms) {
    curve_->require_on_curve(P);
    if (k != 0) terms_.emplace(P, k);
  }
}

Divisor Divisor::point(CurvePtr curve, const Place& P, int multiplicity) {
  return Divisor(std::move(curve), {{P, multiplicity}});
}

Divisor Divisor::at_infinity(CurvePtr curve, int multiplicity) {
  return point(std::move(curve), Place::infinity(), multiplicity);
}

int Divisor::coeff(const Place& P) const {
  auto it = terms_.find(P);
  return it == terms_.end() ? 0 : it->second;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [P, k] : terms_) d += k;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [P, k] : terms_) {
    if (k < 0) return false;
  }
  return true;
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> out;
  out.reserve(terms_.size());
  for (const auto& [P, k] : terms_) out.push_back(P);
  return out;
}

void Divisor::require_same_curve(const Divisor& o) const {
  if (curve_ != o.curve_ && !(*curve_ == *o.curve_)) {
    throw Error(ErrorKind::CurveMismatch, "divisors live on different curves");
  }
}

Divisor Divisor::operator+(const Divisor& o) const {
  require_same_curve(o);
  Divisor out = *this;
  for (const auto& [P, k] : o.terms_) {
    const int v = (out.terms_[P] += k);
    if (v == 0) out.terms_.erase(P);
  }
  return out;
}

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (auto& [P, k] : out.terms_) k = -k;
  return out;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor operator*(int k, const Divisor& D) {
  Divisor out(D.curve_);
  if (k == 0) return out;
  for (const auto& [P, m] : D.terms_) out.terms_.emplace(P, k * m);
  return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
  return *a.curve_ == *b.curve_ && a.terms_ == b.terms_;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [P, k] : terms_) {
    if (!out.empty()) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += "-";
    const int m = k < 0 ? -k : k;
    if (m != 1) out += std::to_string(m) + "*";
    out += P.to_string();
  }
  return out;
}

Divisor divisor_of_function(const CurvePtr& C, const FunctionRep& phi) {
  if (phi.is_zero()) throw Error(ErrorKind::ZeroFunction, "divisor of the zero function");
  const HyperellipticCurve& curve = *C;
  // Every affine zero or pole lies over a root of norm(numerator) * den; with the
  // representation in canonical form, a non-rational root of that product is a
  // genuine zero or pole at a non-rational place.
  const Poly candidates = numerator_norm(curve, phi.a(), phi.b()) * phi.den();
  std::map<Place, int> terms;
  if (candidates.degree() > 0) {
    const RootSet rs = poly_roots(candidates);
    if (!rs.splits) {
      throw Error(ErrorKind::NonSplitSupport,
                  "zeros or poles of " + phi.to_string() + " are not all rational");
    }
    for (const auto& r : rs.roots) {
      const auto places = curve.places_over(r.value);
      if (places.empty()) {
        throw Error(ErrorKind::NonSplitSupport,
                    "zero or pole over x = " + std::to_string(r.value) + " is a degree-2 place");
      }
      for (const auto& P : places) {
        const int v = valuation(curve, phi, P);
        if (v != 0) terms.emplace(P, v);
      }
    }
  }
  const int v_inf = valuation(curve, phi, Place::infinity());
  if (v_inf != 0) terms.emplace(Place::infinity(), v_inf);
  Divisor D(C, terms);
  if (D.degree() != 0) {
    throw Error(ErrorKind::InternalBoundError, "principal divisor of nonzero degree");
  }
  return D;
}

Divisor canonical_divisor(const CurvePtr& C) {
  return Divisor::at_infinity(C, 2 * C->genus() - 2);
}

Divisor reduce_support(const Divisor& D) {
  std::map<Place, int> terms;
  for (const auto& [P, k] : D.terms()) {
    if (k < 0) {
      throw Error(ErrorKind::NotEffective, "coefficient " + std::to_string(k) + " at " +
                                               P.to_string());
    }
    terms.emplace(P, 1);
  }
  return Divisor(D.curve_ptr(), terms);
}

}  // namespace torelli
