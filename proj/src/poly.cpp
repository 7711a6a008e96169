#include "torelli/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "torelli/simd/kernels.hpp"

namespace torelli {

Poly::Poly(PrimeField field, std::vector<Residue> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= field_.prime();
  trim();
}

Poly Poly::from_ints(PrimeField field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Residue> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field.reduce(v));
  return Poly(field, std::move(c));
}

Poly Poly::constant(PrimeField field, Residue c) { return Poly(field, {c}); }

Poly Poly::monomial(PrimeField field, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear(PrimeField field, Residue r) { return Poly(field, {field.neg(r), 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Residue Poly::eval(Residue x) const noexcept {
  Residue acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Residue> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_.mul(field_.reduce(i), c_[i]);
  return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Residue c) const {
  Poly r = *this;
  simd::scale(r.c_, c, field_.prime());
  r.trim();
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::taylor_shift(Residue x0) const {
  // Horner in the shifted variable: r <- r * (x0 + t) + c_i
  std::vector<Residue> r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r.push_back(0);
    for (std::size_t k = r.size() - 1; k > 0; --k) {
      r[k] = field_.add(field_.mul(r[k], x0), r[k - 1]);
    }
    r[0] = field_.add(field_.mul(r[0], x0), *it);
  }
  return Poly(field_, std::move(r));
}

int Poly::root_order(Residue x0) const {
  if (is_zero()) return 0;
  Poly shifted = taylor_shift(x0);
  int k = 0;
  while (shifted.coeff(k) == 0) ++k;
  return k;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& F = a.field_;
  std::vector<Residue> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  const auto& F = a.field_;
  std::vector<Residue> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = field_.neg(v);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& F = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(F);
  std::vector<Residue> r(a.c_.size() + b.c_.size() - 1, 0);
  const std::uint32_t p = F.prime();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    simd::axpy(std::span<Residue>(r).subspan(i, b.c_.size()), b.c_, a.c_[i], p);
  }
  return Poly(F, std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Residue> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Residue> q(rem.size() - db, 0);
  const Residue inv_lead = F.inv(b.lead());
  std::vector<Residue> neg_b(b.coeffs().begin(), b.coeffs().end());
  for (auto& v : neg_b) v = F.neg(v);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Residue coef = F.mul(rem[k], inv_lead);
    q[k - db] = coef;
    if (coef == 0) continue;
    simd::axpy(std::span<Residue>(rem).subspan(k - db, db + 1), neg_b, coef, F.prime());
  }
  rem.resize(db);
  return {Poly(F, std::move(q)), Poly(F, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(base.field(), 1) % m;
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

bool divides(const Poly& b, const Poly& a) { return (a % b).is_zero(); }

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c_[i] == 1 && i > 0;
    if (!unit) out += std::to_string(c_[i]);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace torelli
