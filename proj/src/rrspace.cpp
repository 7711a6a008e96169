#include "torelli/rrspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torelli/error.hpp"
#include "torelli/roots.hpp"
#include "torelli/series.hpp"
#include "torelli/simd/kernels.hpp"

namespace torelli {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

// Column j of the candidate space is x^deg (is_b = false) or x^deg * y. Columns
// are sorted by pole order at infinity, so kernel vectors reduced on free columns
// have distinct leading pole orders.
struct Column {
  int key;
  bool is_b;
  int deg;
};

std::vector<Column> make_columns(int max_a, int max_b, int g) {
  std::vector<Column> cols;
  for (int i = 0; i <= max_a; ++i) cols.push_back({2 * i, false, i});
  for (int j = 0; j <= max_b; ++j) cols.push_back({2 * j + 2 * g + 1, true, j});
  std::sort(cols.begin(), cols.end(), [](const Column& u, const Column& v) { return u.key < v.key; });
  return cols;
}

// (x0 + t)^i truncated to prec terms, for i = 0..max_deg.
std::vector<Series> shifted_powers(const PrimeField& F, Residue x0, int max_deg, std::size_t prec) {
  std::vector<Series> out;
  Series cur(prec, 0);
  cur[0] = 1;
  for (int i = 0; i <= max_deg; ++i) {
    out.push_back(cur);
    Series next(prec, 0);
    for (std::size_t k = 0; k < prec; ++k) {
      next[k] = F.add(next[k], F.mul(cur[k], x0));
      if (k + 1 < prec) next[k + 1] = F.add(next[k + 1], cur[k]);
    }
    cur = std::move(next);
  }
  return out;
}

struct Layout {
  int max_a;
  int max_b;
  std::vector<Column> cols;
  std::vector<std::size_t> a_col;  // column index of x^i
  std::vector<std::size_t> b_col;  // column index of x^j y
};

Layout make_layout(int max_a, int max_b, int g) {
  Layout L{max_a, max_b, make_columns(max_a, max_b, g), {}, {}};
  L.a_col.resize(static_cast<std::size_t>(std::max(max_a + 1, 0)));
  L.b_col.resize(static_cast<std::size_t>(std::max(max_b + 1, 0)));
  for (std::size_t c = 0; c < L.cols.size(); ++c) {
    auto& slot = L.cols[c].is_b ? L.b_col : L.a_col;
    slot[static_cast<std::size_t>(L.cols[c].deg)] = c;
  }
  return L;
}

void check_riemann_roch(const HyperellipticCurve& C, const Divisor& D, int dim) {
  const int g = C.genus();
  const int deg = D.degree();
  bool ok = true;
  if (deg < 0) ok = dim == 0;
  else if (deg > 2 * g - 2) ok = dim == deg - g + 1;
  else ok = dim >= std::max(0, deg - g + 1) && dim <= deg / 2 + 1;
  if (!ok) {
    throw Error(ErrorKind::InternalBoundError, "h0(" + D.to_string() + ") = " +
                                                   std::to_string(dim) +
                                                   " violates Riemann-Roch bounds");
  }
}

}  // namespace

std::vector<Residue> RRSpace::column_vector(const Poly& a, const Poly& b) const {
  std::vector<Residue> v(ncols_, 0);
  for (int i = 0; i <= a.degree(); ++i) v[a_col_[i]] = a.coeff(i);
  for (int j = 0; j <= b.degree(); ++j) v[b_col_[j]] = b.coeff(j);
  return v;
}

std::optional<std::vector<Residue>> RRSpace::coordinates_of_numerator(const Poly& a,
                                                                       const Poly& b) const {
  if (a.degree() > max_a_ || b.degree() > max_b_) return std::nullopt;
  const std::vector<Residue> v = column_vector(a, b);
  const std::uint32_t p = divisor_.curve().prime();
  std::vector<Residue> coords(free_cols_.size());
  std::vector<Residue> rebuilt(v.size(), 0);
  for (std::size_t k = 0; k < free_cols_.size(); ++k) {
    coords[k] = v[free_cols_[k]];
    if (coords[k] != 0) simd::axpy(rebuilt, kernel_[k], coords[k], p);
  }
  if (rebuilt != v) return std::nullopt;
  return coords;
}

std::optional<std::vector<Residue>> RRSpace::coordinates(const FunctionRep& phi) const {
  if (phi.is_zero()) return std::vector<Residue>(basis_.size(), 0);
  auto [qa, ra] = divmod(phi.a() * den_, phi.den());
  auto [qb, rb] = divmod(phi.b() * den_, phi.den());
  if (!ra.is_zero() || !rb.is_zero()) return std::nullopt;
  return coordinates_of_numerator(qa, qb);
}

RRSpace rr_basis(const CurvePtr& C, const Divisor& D) {
  if (!(*D.curve_ptr() == *C)) throw Error(ErrorKind::CurveMismatch, "divisor is on another curve");
  const HyperellipticCurve& curve = *C;
  const PrimeField& F = curve.field();
  const int g = curve.genus();

  // Group the affine support by x-coordinate and pick the clearing exponent.
  std::map<Residue, int> exponent;
  for (const auto& [P, k] : D.terms()) {
    if (P.is_infinity()) continue;
    int& e = exponent[P.x()];
    const int need = P.is_weierstrass() ? ceil_div(std::max(k, 0), 2) : std::max(k, 0);
    e = std::max(e, need);
  }
  Poly c = Poly::constant(F, 1);
  for (const auto& [x0, e] : exponent) {
    if (e > 0) c *= Poly::linear(F, x0).pow(static_cast<unsigned>(e));
  }

  RRSpace space(D, c);
  const int n_inf = D.coeff(Place::infinity());
  const int budget = n_inf + 2 * c.degree();
  space.max_a_ = std::max(floor_div(budget, 2), -1);
  space.max_b_ = std::max(floor_div(budget - 2 * g - 1, 2), -1);
  const Layout L = make_layout(space.max_a_, space.max_b_, g);
  const std::size_t ncols = L.cols.size();
  space.a_col_ = L.a_col;
  space.b_col_ = L.b_col;
  space.ncols_ = ncols;

  // Each affine place over the support imposes v_P(a + b y) >= v_P(c) - D(P).
  std::vector<std::vector<Residue>> rows;
  for (const auto& [x0, e] : exponent) {
    for (const auto& P : curve.places_over(x0)) {
      const int vc = P.is_weierstrass() ? 2 * e : e;
      const int m = vc - D.coeff(P);
      if (m <= 0) continue;
      if (P.is_weierstrass()) {
        // v = min(2 ord a, 2 ord b + 1)
        const int need_a = ceil_div(m, 2);
        const int need_b = floor_div(m, 2);
        const auto pw = shifted_powers(F, x0, std::max(L.max_a, L.max_b),
                                       static_cast<std::size_t>(std::max(need_a, need_b)));
        for (int k = 0; k < need_a; ++k) {
          std::vector<Residue> row(ncols, 0);
          for (int i = 0; i <= L.max_a; ++i) row[L.a_col[i]] = pw[i][k];
          rows.push_back(std::move(row));
        }
        for (int k = 0; k < need_b; ++k) {
          std::vector<Residue> row(ncols, 0);
          for (int j = 0; j <= L.max_b; ++j) row[L.b_col[j]] = pw[j][k];
          rows.push_back(std::move(row));
        }
      } else {
        const std::size_t prec = static_cast<std::size_t>(m);
        const auto pw = shifted_powers(F, x0, std::max(L.max_a, L.max_b), prec);
        const Series ys = y_expansion(curve, P, prec);
        std::vector<Series> yb;
        for (int j = 0; j <= L.max_b; ++j) yb.push_back(series_mul(F, pw[j], ys, prec));
        for (std::size_t k = 0; k < prec; ++k) {
          std::vector<Residue> row(ncols, 0);
          for (int i = 0; i <= L.max_a; ++i) row[L.a_col[i]] = pw[i][k];
          for (int j = 0; j <= L.max_b; ++j) row[L.b_col[j]] = yb[j][k];
          rows.push_back(std::move(row));
        }
      }
    }
  }

  Matrix M(F, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::copy(rows[r].begin(), rows[r].end(), M.row(r).begin());
  }
  RankKernel rk = rank_kernel(M);

  for (std::size_t k = 0; k < rk.kernel.size(); ++k) {
    const auto& vec = rk.kernel[k];
    std::vector<Residue> ac(static_cast<std::size_t>(L.max_a + 1), 0);
    std::vector<Residue> bc(static_cast<std::size_t>(std::max(L.max_b + 1, 0)), 0);
    for (int i = 0; i <= L.max_a; ++i) ac[i] = vec[L.a_col[i]];
    for (int j = 0; j <= L.max_b; ++j) bc[j] = vec[L.b_col[j]];
    Poly a(F, std::move(ac));
    Poly b(F, std::move(bc));
    space.basis_.emplace_back(a, b, c);
    space.numerators_.emplace_back(std::move(a), std::move(b));
  }
  space.kernel_ = std::move(rk.kernel);
  space.free_cols_ = std::move(rk.free_columns);
  check_riemann_roch(curve, D, space.dim());
  return space;
}

int h0(const CurvePtr& C, const Divisor& D) {
  // Cheap exits before building any linear system.
  const int g = C->genus();
  const int deg = D.degree();
  if (deg < 0) return 0;
  if (deg > 2 * g - 2) return deg - g + 1;
  return rr_basis(C, D).dim();
}

int h1(const CurvePtr& C, const Divisor& D) { return h0(C, canonical_divisor(C) - D); }

bool linearly_equivalent(const CurvePtr& C, const Divisor& D, const Divisor& E) {
  const Divisor diff = D - E;
  return diff.degree() == 0 && h0(C, diff) == 1;
}

namespace {

// Rational places worth testing for a base point: the places over x-values of
// the support, plus those over any rational root of `extra`.
std::vector<Place> candidate_places(const HyperellipticCurve& curve, const Divisor& D,
                                    const std::vector<Residue>& extra_x) {
  std::set<Place> out{Place::infinity()};
  std::set<Residue> xs(extra_x.begin(), extra_x.end());
  for (const auto& [P, k] : D.terms()) {
    if (!P.is_infinity()) xs.insert(P.x());
  }
  for (Residue x0 : xs) {
    for (const auto& P : curve.places_over(x0)) out.insert(P);
  }
  return {out.begin(), out.end()};
}

bool is_base_point(const HyperellipticCurve& curve, const RRSpace& V, const Place& P) {
  const int n = V.divisor().coeff(P);
  for (const auto& phi : V.basis()) {
    if (valuation(curve, phi, P) + n == 0) return false;
  }
  return true;
}

}  // namespace

bool is_base_point_free(const CurvePtr& C, const Divisor& D) {
  const HyperellipticCurve& curve = *C;
  const int g = curve.genus();
  const int deg = D.degree();
  if (deg >= 2 * g) return true;
  const RRSpace V = rr_basis(C, D);
  if (V.dim() == 0) return false;
  if (V.dim() == 1) return deg == 0;

  // A base point away from the support is a common zero of every numerator,
  // so its x-coordinate is a root of the gcd of the numerator norms.
  Poly G(curve.field());
  for (const auto& [a, b] : V.numerators()) G = gcd(G, numerator_norm(curve, a, b));
  std::vector<Residue> rational_x;
  Poly rest = G;
  if (G.degree() > 0) {
    for (const auto& r : poly_roots(G).roots) {
      rational_x.push_back(r.value);
      rest = rest / Poly::linear(curve.field(), r.value).pow(static_cast<unsigned>(r.multiplicity));
    }
  }
  for (const auto& P : candidate_places(curve, D, rational_x)) {
    if (is_base_point(curve, V, P)) return false;
  }
  // Rational x with f(x) a non-square carries one place of degree 2; every
  // numerator vanishes there iff both of its components vanish at x.
  for (Residue x0 : rational_x) {
    if (!curve.places_over(x0).empty()) continue;
    bool all_vanish = true;
    for (const auto& [a, b] : V.numerators()) {
      if (a.eval(x0) != 0 || b.eval(x0) != 0) {
        all_vanish = false;
        break;
      }
    }
    if (all_vanish) return false;
  }
  if (rest.degree() > 0) {
    bool all_divisible = true;
    for (const auto& [a, b] : V.numerators()) {
      if (!divides(rest, a) || !divides(rest, b)) {
        all_divisible = false;
        break;
      }
    }
    if (all_divisible) return false;
    throw Error(ErrorKind::Inconclusive,
                "possible base point over the roots of " + rest.to_string());
  }
  return true;
}

namespace {

// Normal vector of the hyperplane coordinates(L(E)) inside L(D), scaled so that
// its first nonzero entry is 1.
std::vector<Residue> hyperplane_normal(const CurvePtr& C, const RRSpace& V, const Divisor& E) {
  const RRSpace W = rr_basis(C, E);
  const PrimeField& F = C->field();
  Matrix M(F, static_cast<std::size_t>(W.dim()), static_cast<std::size_t>(V.dim()));
  for (int r = 0; r < W.dim(); ++r) {
    auto coords = V.coordinates(W.basis()[r]);
    if (!coords) throw Error(ErrorKind::InternalBoundError, "L(D - P) not inside L(D)");
    std::copy(coords->begin(), coords->end(), M.row(r).begin());
  }
  // The normal n satisfies n . w = 0 for every coordinate row w.
  RankKernel normals = rank_kernel(M);
  if (normals.kernel.size() != 1) {
    throw Error(ErrorKind::InternalBoundError, "hyperplane expected");
  }
  std::vector<Residue> n = normals.kernel.front();
  for (Residue v : n) {
    if (v != 0) {
      const Residue inv = F.inv(v);
      for (auto& u : n) u = F.mul(u, inv);
      break;
    }
  }
  return n;
}

}  // namespace

bool is_very_ample(const CurvePtr& C, const Divisor& D) {
  const HyperellipticCurve& curve = *C;
  const int g = curve.genus();
  const int deg = D.degree();
  if (deg >= 2 * g + 1) return true;
  const Divisor K = canonical_divisor(C);
  // Special complete systems on a hyperelliptic curve factor through the
  // hyperelliptic map.
  if (g >= 1 && h0(C, K - D) > 0) return false;
  const RRSpace V = rr_basis(C, D);
  if (g >= 1 && V.dim() <= 2) return false;
  if (!is_base_point_free(C, D)) return false;
  // D - P - Q fails to impose two conditions iff D - P - Q ~ K.
  if (deg == 2 * g) return h0(C, D - K) == 0;

  std::map<std::vector<Residue>, Place> seen;
  for (const auto& P : curve.rational_places()) {
    const Divisor DP = D - Divisor::point(C, P);
    auto n = hyperplane_normal(C, V, DP);
    auto [it, fresh] = seen.emplace(n, P);
    if (!fresh) return false;
    if (h0(C, DP - Divisor::point(C, P)) != V.dim() - 2) return false;
  }
  throw Error(ErrorKind::Inconclusive,
              "no rational pair separates " + D.to_string() + "; non-rational pairs untested");
}

}  // namespace torelli
