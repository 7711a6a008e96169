#include <doctest.h>

#include "torelli/error.hpp"
#include "torelli/generators.hpp"
#include "torelli/io.hpp"

using namespace torelli;
using io::json;

TEST_CASE("curve and divisor round trip") {
  const CurvePtr C = genus2_curve(101);
  const json jc = io::curve_to_json(*C);
  CHECK(jc == json::parse(R"({"p": 101, "f": [1, 0, 0, 0, 0, 1]})"));
  const CurvePtr back = io::curve_from_json(jc);
  CHECK(*back == *C);

  const Divisor D = Divisor::point(C, Place::affine(2, 29), 3) - Divisor::at_infinity(C, 2);
  const json jd = io::divisor_to_json(D);
  CHECK(jd == json::parse(R"([["inf", -2], [[2, 29], 3]])"));
  CHECK(io::divisor_from_json(C, jd) == D);
  // repeated places accumulate, negative residues reduce
  CHECK(io::divisor_from_json(C, json::parse(R"([[[2, -72], 1], [[2, 29], 2], ["inf", -2]])")) == D);
}

TEST_CASE("malformed input") {
  const CurvePtr C = genus2_curve(101);
  CHECK_THROWS_AS(io::parse_json("{not json"), io::MalformedInput);
  CHECK_THROWS_AS(io::curve_from_json(json::parse(R"({"f": [1, 0, 0, 1]})")), io::MalformedInput);
  CHECK_THROWS_AS(io::curve_from_json(json::parse(R"({"p": 101, "f": "x^3"})")), io::MalformedInput);
  CHECK_THROWS_AS(io::divisor_from_json(C, json::parse(R"([["inf"]])")), io::MalformedInput);
  CHECK_THROWS_AS(io::divisor_from_json(C, json::parse(R"({"inf": 1})")), io::MalformedInput);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), io::MalformedInput);
  // well-formed but off the curve is a domain error
  CHECK_THROWS_AS(io::divisor_from_json(C, json::parse(R"([[[3, 3], 1]])")), Error);
}

TEST_CASE("Weierstrass data round trip") {
  const CurvePtr C = genus2_split_curve(101);
  WeierstrassData W = build_twist_example(C, 3);
  W.h1_parity = Parity::Odd;
  W.clifford = 0;
  const json j = io::weierstrass_to_json(W);
  const WeierstrassData back = io::weierstrass_from_json(j);
  CHECK(*back.curve == *C);
  CHECK(back.L == W.L);
  CHECK(back.A == W.A);
  CHECK(back.B == W.B);
  CHECK(back.h1_parity == Parity::Odd);
  CHECK(back.clifford == 0);
  CHECK(io::weierstrass_to_json(back).dump() == j.dump());
}

TEST_CASE("invariants re-parse and re-verdict identically") {
  const CurvePtr C = genus2_curve(101);
  const WeierstrassData W = build_d5_example(C, random_split_cubic(*C, 5));
  const SurfaceInvariants inv = invariants_from_weierstrass(W);
  const json j = io::invariants_to_json(inv);
  CHECK(j.at("p_g") == 6);
  const SurfaceInvariants back = io::invariants_from_json(j, C);
  CHECK(io::invariants_to_json(back) == j);
  CHECK(io::verdict_to_json(torelli_verdict(back)) == io::verdict_to_json(torelli_verdict(inv)));
  // without the curve, Delta is dropped but the verdict is unchanged
  CHECK(io::verdict_to_json(torelli_verdict(io::invariants_from_json(j))) ==
        io::verdict_to_json(torelli_verdict(inv)));
  CHECK_THROWS_AS(io::invariants_from_json(json::parse(R"({"g": 1, "d": 1, "s": 2, "j_class": "Sometimes"})")),
                  io::MalformedInput);
}

TEST_CASE("verdict keys are sorted") {
  Verdict v;
  v.rule_id = "R10";
  const std::string s = io::verdict_to_json(v).dump();
  CHECK(s.find("\"assumption_dependent\"") < s.find("\"outcome\""));
  CHECK(s.find("\"mu_corank\"") < s.find("\"rule\""));
}
