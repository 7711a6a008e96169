#include "torelli/io.hpp"

#include <fstream>
#include <sstream>

namespace torelli::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInput(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object containing \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

template <typename T, typename F>
json optional_to_json(const std::optional<T>& v, F&& conv) {
  return v ? json(conv(*v)) : json(nullptr);
}

std::optional<int> optional_int(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return static_cast<int>(as_int(*it, key));
}

std::optional<bool> optional_bool(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_boolean()) malformed(std::string(key) + " must be a boolean");
  return it->get<bool>();
}

std::optional<Parity> parity_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j == "even") return Parity::Even;
  if (j == "odd") return Parity::Odd;
  malformed("h1_parity must be \"even\", \"odd\" or null");
}

JClass jclass_from_string(const std::string& s) {
  for (JClass c : {JClass::Nonconstant, JClass::ConstantZero, JClass::Constant1728, JClass::ConstantOther}) {
    if (s == to_string(c)) return c;
  }
  malformed("unknown j_class \"" + s + "\"");
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

json poly_to_json(const Poly& f) {
  json out = json::array();
  for (Residue c : f.coeffs()) out.push_back(c);
  return out;
}

Poly poly_from_json(const PrimeField& F, const json& j) {
  if (!j.is_array()) malformed("polynomial must be an array of coefficients");
  std::vector<std::int64_t> c;
  for (const auto& v : j) c.push_back(as_int(v, "coefficient"));
  return Poly::from_ints(F, c);
}

json curve_to_json(const HyperellipticCurve& C) {
  return json{{"p", C.prime()}, {"f", poly_to_json(C.f())}};
}

CurvePtr curve_from_json(const json& j) {
  const std::int64_t p = as_int(field(j, "p"), "p");
  if (p < 0 || p > 0xFFFFFFFFll) malformed("p out of range");
  const PrimeField F(static_cast<std::uint32_t>(p));
  return make_curve(static_cast<std::uint32_t>(p), poly_from_json(F, field(j, "f")));
}

json place_to_json(const Place& P) {
  if (P.is_infinity()) return "inf";
  return json::array({P.x(), P.y()});
}

Place place_from_json(const HyperellipticCurve& C, const json& j) {
  if (j == "inf") return Place::infinity();
  if (!j.is_array() || j.size() != 2) malformed("place must be \"inf\" or [x, y]");
  const PrimeField& F = C.field();
  const Place P = Place::affine(F.reduce(as_int(j[0], "x")), F.reduce(as_int(j[1], "y")));
  C.require_on_curve(P);
  return P;
}

json divisor_to_json(const Divisor& D) {
  json out = json::array();
  for (const auto& [P, k] : D.terms()) out.push_back(json::array({place_to_json(P), k}));
  return out;
}

Divisor divisor_from_json(const CurvePtr& C, const json& j) {
  if (!j.is_array()) malformed("divisor must be a list of [place, multiplicity]");
  Divisor D(C);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) malformed("divisor term must be [place, multiplicity]");
    D += Divisor::point(C, place_from_json(*C, term[0]), static_cast<int>(as_int(term[1], "multiplicity")));
  }
  return D;
}

json function_to_json(const FunctionRep& phi) {
  return json{{"a", poly_to_json(phi.a())}, {"b", poly_to_json(phi.b())}, {"den", poly_to_json(phi.den())}};
}

FunctionRep function_from_json(const PrimeField& F, const json& j) {
  Poly a = poly_from_json(F, field(j, "a"));
  Poly b = poly_from_json(F, field(j, "b"));
  Poly den = j.contains("den") ? poly_from_json(F, j.at("den")) : Poly::constant(F, 1);
  if (den.is_zero()) malformed("den must be nonzero");
  return FunctionRep(std::move(a), std::move(b), std::move(den));
}

json weierstrass_to_json(const WeierstrassData& W) {
  return json{{"curve", curve_to_json(*W.curve)},
              {"L", divisor_to_json(W.L)},
              {"A", function_to_json(W.A)},
              {"B", function_to_json(W.B)},
              {"h1_parity", optional_to_json(W.h1_parity, [](Parity p) { return to_string(p); })},
              {"clifford", optional_to_json(W.clifford, [](int c) { return c; })}};
}

WeierstrassData weierstrass_from_json(const json& j) {
  CurvePtr C = curve_from_json(field(j, "curve"));
  const PrimeField& F = C->field();
  WeierstrassData W{C, divisor_from_json(C, field(j, "L")), function_from_json(F, field(j, "A")),
                    function_from_json(F, field(j, "B")), std::nullopt, std::nullopt};
  if (j.contains("h1_parity")) W.h1_parity = parity_from_json(j.at("h1_parity"));
  W.clifford = optional_int(j, "clifford");
  return W;
}

json invariants_to_json(const SurfaceInvariants& inv) {
  auto same = [](auto v) { return v; };
  return json{{"g", inv.g},
              {"d", inv.d},
              {"s", inv.s},
              {"p_g", inv.p_g()},
              {"Delta", inv.delta ? divisor_to_json(*inv.delta) : json(nullptr)},
              {"h0_L", optional_to_json(inv.h0_L, same)},
              {"h0_Linv_Delta", optional_to_json(inv.h0_Linv_Delta, same)},
              {"h0_L2inv_Delta", optional_to_json(inv.h0_L2inv_Delta, same)},
              {"j_class", to_string(inv.j_class)},
              {"L_trivial", inv.L_trivial},
              {"L2_is_Delta", optional_to_json(inv.L2_is_Delta, same)},
              {"h1_parity", optional_to_json(inv.h1_parity, [](Parity p) { return to_string(p); })},
              {"clifford", optional_to_json(inv.clifford, same)},
              {"very_ample_KL", optional_to_json(inv.very_ample_KL, same)},
              {"very_ample_KLinvDelta", optional_to_json(inv.very_ample_KLinvDelta, same)}};
}

SurfaceInvariants invariants_from_json(const json& j, const CurvePtr& C) {
  SurfaceInvariants inv;
  inv.g = static_cast<int>(as_int(field(j, "g"), "g"));
  inv.d = static_cast<int>(as_int(field(j, "d"), "d"));
  inv.s = static_cast<int>(as_int(field(j, "s"), "s"));
  if (C && j.contains("Delta") && !j.at("Delta").is_null()) inv.delta = divisor_from_json(C, j.at("Delta"));
  inv.h0_L = optional_int(j, "h0_L");
  inv.h0_Linv_Delta = optional_int(j, "h0_Linv_Delta");
  inv.h0_L2inv_Delta = optional_int(j, "h0_L2inv_Delta");
  const json& jc = field(j, "j_class");
  if (!jc.is_string()) malformed("j_class must be a string");
  inv.j_class = jclass_from_string(jc.get<std::string>());
  inv.L_trivial = optional_bool(j, "L_trivial").value_or(false);
  inv.L2_is_Delta = optional_bool(j, "L2_is_Delta");
  if (j.contains("h1_parity")) inv.h1_parity = parity_from_json(j.at("h1_parity"));
  inv.clifford = optional_int(j, "clifford");
  inv.very_ample_KL = optional_bool(j, "very_ample_KL");
  inv.very_ample_KLinvDelta = optional_bool(j, "very_ample_KLinvDelta");
  return inv;
}

json verdict_to_json(const Verdict& v) {
  auto same = [](auto x) { return x; };
  return json{{"outcome", to_string(v.outcome)},
              {"rule_id", v.rule_id},
              {"rule", v.rule},
              {"reason", v.reason},
              {"mu_corank", optional_to_json(v.mu_corank, same)},
              {"mu_rank", optional_to_json(v.mu_rank, same)},
              {"mu_target", optional_to_json(v.mu_target, same)},
              {"assumption_dependent", v.assumption_dependent}};
}

}  // namespace torelli::io
