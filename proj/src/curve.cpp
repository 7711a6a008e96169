#include "torelli/curve.hpp"

#include <algorithm>

#include "torelli/error.hpp"
#include "torelli/roots.hpp"
#include "torelli/series.hpp"

namespace torelli {

std::string Place::to_string() const {
  if (infinity_) return "inf";
  return "(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
}

HyperellipticCurve::HyperellipticCurve(std::uint32_t p, Poly f)
    : field_(p), f_(std::move(f)), genus_(0) {
  if (!(f_.field() == field_)) {
    throw Error(ErrorKind::BadPrime, "polynomial modulus differs from curve modulus");
  }
  if (f_.degree() < 3 || f_.degree() % 2 == 0) {
    throw Error(ErrorKind::BadDegree,
                "f must have odd degree >= 3, got degree " + std::to_string(f_.degree()));
  }
  if (f_.lead() != 1) throw Error(ErrorKind::BadDegree, "f must be monic");
  if (!is_squarefree(f_)) throw Error(ErrorKind::NotSquarefree, "f = " + f_.to_string());
  genus_ = (f_.degree() - 1) / 2;
}

bool HyperellipticCurve::contains(const Place& P) const {
  if (P.is_infinity()) return true;
  if (P.x() >= prime() || P.y() >= prime()) return false;
  return field_.mul(P.y(), P.y()) == f_.eval(P.x());
}

void HyperellipticCurve::require_on_curve(const Place& P) const {
  if (!contains(P)) throw Error(ErrorKind::NotOnCurve, P.to_string() + " is not on the curve");
}

std::vector<Place> HyperellipticCurve::places_over(Residue x0) const {
  const Residue v = f_.eval(x0);
  if (v == 0) return {Place::affine(x0, 0)};
  auto r = field_.sqrt(v);
  if (!r) return {};
  const Residue y0 = std::min(*r, field_.neg(*r));
  return {Place::affine(x0, y0), Place::affine(x0, field_.neg(y0))};
}

std::vector<Place> HyperellipticCurve::rational_places() const {
  std::vector<Place> out{Place::infinity()};
  for (Residue x = 0; x < prime(); ++x) {
    for (const auto& P : places_over(x)) out.push_back(P);
  }
  return out;
}

Place HyperellipticCurve::conjugate(const Place& P) const {
  if (P.is_weierstrass()) return P;
  return Place::affine(P.x(), field_.neg(P.y()));
}

CurvePtr make_curve(std::uint32_t p, const Poly& f) {
  return std::make_shared<const HyperellipticCurve>(p, f);
}

CurvePtr make_curve(std::uint32_t p, const std::vector<std::int64_t>& f_coeffs) {
  const PrimeField F(p);
  return make_curve(p, Poly::from_ints(F, f_coeffs));
}

std::vector<Place> weierstrass_places(const HyperellipticCurve& C) {
  std::vector<Place> out{Place::infinity()};
  for (const auto& r : poly_roots(C.f()).roots) out.push_back(Place::affine(r.value, 0));
  return out;
}

// ---------------------------------------------------------------------------
// Function field arithmetic

FunctionRep::FunctionRep(Poly a, Poly b, Poly den)
    : a_(std::move(a)), b_(std::move(b)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("FunctionRep with zero denominator");
  const PrimeField& F = den_.field();
  if (a_.is_zero() && b_.is_zero()) {
    den_ = Poly::constant(F, 1);
    return;
  }
  const Poly g = gcd(gcd(a_, b_), den_);
  if (g.degree() > 0) {
    a_ = a_ / g;
    b_ = b_ / g;
    den_ = den_ / g;
  }
  const Residue inv = F.inv(den_.lead());
  a_ = a_.scaled(inv);
  b_ = b_.scaled(inv);
  den_ = den_.scaled(inv);
}

FunctionRep::FunctionRep(Poly a)
    : FunctionRep(a, Poly(a.field()), Poly::constant(a.field(), 1)) {}

FunctionRep FunctionRep::constant(const PrimeField& F, Residue c) {
  return FunctionRep(Poly::constant(F, c));
}

FunctionRep FunctionRep::x(const PrimeField& F) { return FunctionRep(Poly::x(F)); }

FunctionRep FunctionRep::y(const PrimeField& F) {
  return FunctionRep(Poly(F), Poly::constant(F, 1), Poly::constant(F, 1));
}

std::optional<Residue> FunctionRep::evaluate(Residue x, Residue y) const {
  const PrimeField& F = field();
  const Residue d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return F.div(F.add(a_.eval(x), F.mul(b_.eval(x), y)), d);
}

std::string FunctionRep::to_string() const {
  if (is_zero()) return "0";
  std::string num;
  if (!a_.is_zero()) num = a_.to_string();
  if (!b_.is_zero()) {
    if (!num.empty()) num += " + ";
    num += b_.degree() == 0 && b_.lead() == 1 ? "y" : "(" + b_.to_string() + ")*y";
  }
  if (den_.degree() == 0) return num;
  return "(" + num + ")/(" + den_.to_string() + ")";
}

FunctionRep operator+(const FunctionRep& u, const FunctionRep& v) {
  if (u.den() == v.den()) return FunctionRep(u.a() + v.a(), u.b() + v.b(), u.den());
  return FunctionRep(u.a() * v.den() + v.a() * u.den(), u.b() * v.den() + v.b() * u.den(),
                     u.den() * v.den());
}

FunctionRep operator-(const FunctionRep& u) { return FunctionRep(-u.a(), -u.b(), u.den()); }

FunctionRep operator-(const FunctionRep& u, const FunctionRep& v) { return u + (-v); }

FunctionRep scaled(const FunctionRep& u, Residue c) {
  return FunctionRep(u.a().scaled(c), u.b().scaled(c), u.den());
}

FunctionRep multiply(const HyperellipticCurve& C, const FunctionRep& u, const FunctionRep& v) {
  return FunctionRep(u.a() * v.a() + u.b() * v.b() * C.f(), u.a() * v.b() + u.b() * v.a(),
                     u.den() * v.den());
}

FunctionRep power(const HyperellipticCurve& C, const FunctionRep& u, unsigned e) {
  FunctionRep result = FunctionRep::constant(u.field(), 1);
  FunctionRep base = u;
  while (e > 0) {
    if (e & 1) result = multiply(C, result, base);
    e >>= 1;
    if (e > 0) base = multiply(C, base, base);
  }
  return result;
}

Poly numerator_norm(const HyperellipticCurve& C, const Poly& a, const Poly& b) {
  return a * a - b * b * C.f();
}

FunctionRep inverse(const HyperellipticCurve& C, const FunctionRep& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroFunction, "inverse of the zero function");
  // 1/(a + b y) = (a - b y) / (a^2 - b^2 f)
  const Poly n = numerator_norm(C, u.a(), u.b());
  return FunctionRep(u.a() * u.den(), -(u.b() * u.den()), n);
}

// ---------------------------------------------------------------------------
// Valuations

int x_poly_valuation(const HyperellipticCurve&, const Poly& c, const Place& P) {
  if (c.is_zero()) return kInfiniteValuation;
  if (P.is_infinity()) return -2 * c.degree();
  const int k = c.root_order(P.x());
  return P.is_weierstrass() ? 2 * k : k;
}

int numerator_valuation(const HyperellipticCurve& C, const Poly& a, const Poly& b,
                        const Place& P) {
  if (a.is_zero() && b.is_zero()) return kInfiniteValuation;
  const int g = C.genus();
  if (P.is_infinity()) {
    // v(x) = -2 and v(y) = -(2g+1) have different parity, so no cancellation.
    int v = kInfiniteValuation;
    if (!a.is_zero()) v = std::min(v, -2 * a.degree());
    if (!b.is_zero()) v = std::min(v, -2 * b.degree() - (2 * g + 1));
    return v;
  }
  if (P.is_weierstrass()) {
    // y is a uniformizer and v(x - x0) = 2; again the parities differ.
    int v = kInfiniteValuation;
    if (!a.is_zero()) v = std::min(v, 2 * a.root_order(P.x()));
    if (!b.is_zero()) v = std::min(v, 2 * b.root_order(P.x()) + 1);
    return v;
  }
  // v_P(N) + v_{P'}(N) = ord_{x0}(a^2 - b^2 f), which bounds the expansion depth.
  const Poly norm = numerator_norm(C, a, b);
  const int bound = norm.root_order(P.x());
  if (bound == 0) return 0;
  const std::size_t prec = static_cast<std::size_t>(bound) + 1;
  const Series ys = y_expansion(C, P, prec);
  const Series local = local_numerator(C.field(), a, b, P.x(), ys, prec);
  for (std::size_t k = 0; k < prec; ++k) {
    if (local[k] != 0) return static_cast<int>(k);
  }
  throw Error(ErrorKind::InternalBoundError, "local expansion exceeded the norm bound");
}

int valuation(const HyperellipticCurve& C, const FunctionRep& phi, const Place& P) {
  if (phi.is_zero()) return kInfiniteValuation;
  return numerator_valuation(C, phi.a(), phi.b(), P) - x_poly_valuation(C, phi.den(), P);
}

}  // namespace torelli
