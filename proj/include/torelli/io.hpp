#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "torelli/torelli.hpp"

namespace torelli::io {

using json = nlohmann::json;

/// Input that does not have the expected JSON shape.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);
json parse_json(const std::string& text);

json curve_to_json(const HyperellipticCurve& C);
CurvePtr curve_from_json(const json& j);

json place_to_json(const Place& P);
Place place_from_json(const HyperellipticCurve& C, const json& j);

json divisor_to_json(const Divisor& D);
Divisor divisor_from_json(const CurvePtr& C, const json& j);

json poly_to_json(const Poly& f);
Poly poly_from_json(const PrimeField& F, const json& j);

json function_to_json(const FunctionRep& phi);
FunctionRep function_from_json(const PrimeField& F, const json& j);

json weierstrass_to_json(const WeierstrassData& W);
WeierstrassData weierstrass_from_json(const json& j);

json invariants_to_json(const SurfaceInvariants& inv);
/// `C` is needed only to re-read the Delta divisor.
SurfaceInvariants invariants_from_json(const json& j, const CurvePtr& C = nullptr);

json verdict_to_json(const Verdict& v);

}  // namespace torelli::io
