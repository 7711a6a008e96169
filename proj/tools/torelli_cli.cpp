// torelli: command-line front end. JSON on stdout, errors on stderr.
// Exit codes: 0 ok, 1 domain error, 2 malformed input or bad flags.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "torelli/acceptance.hpp"
#include "torelli/error.hpp"
#include "torelli/generators.hpp"
#include "torelli/io.hpp"

using namespace torelli;
using io::json;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

CurvePtr load_curve(const std::string& path) { return io::curve_from_json(io::read_json_file(path)); }

Divisor load_divisor(const CurvePtr& C, const std::string& path) {
  return io::divisor_from_json(C, io::read_json_file(path));
}

json basis_strings(const RRSpace& V) {
  json out = json::array();
  for (const auto& b : V.basis()) out.push_back(b.to_string());
  return out;
}

WeierstrassData make_example(const std::string& kind, std::uint64_t seed) {
  const std::uint32_t p = example_prime();
  if (kind == "twist") return build_twist_example(genus2_split_curve(p), seed);
  if (kind == "d5") {
    const CurvePtr C = genus2_curve(p);
    return build_d5_example(C, random_split_cubic(*C, seed));
  }
  // bundle: T = (x_w, 0) - inf on the genus-1 curve, A and B with poles at x_w.
  const CurvePtr C = genus1_curve(p);
  const PrimeField& F = C->field();
  const auto ws = weierstrass_x_values(*C);
  if (ws.empty()) throw Error(ErrorKind::NotTorsion, "no rational 2-torsion point");
  std::mt19937_64 rng(seed);
  for (;;) {
    const Residue alpha = static_cast<Residue>(1 + rng() % (p - 1));
    const Residue beta = static_cast<Residue>(1 + rng() % (p - 1));
    const Residue disc = F.add(F.mul(4, F.pow(alpha, 3)), F.mul(27, F.mul(beta, beta)));
    if (disc != 0) return fiber_bundle_instance(C, ws.front(), alpha, beta);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinitesimal Torelli engine for elliptic surfaces over hyperelliptic curves"};
  app.require_subcommand(1);

  std::string curve_file, divisor_file, f_file, l_file, delta_file, w_file, out_file, kind;
  int p = 0, q = 0, max_p = 2;
  std::size_t cap = kDefaultKoszulCap;
  std::uint64_t seed = 1;
  bool compute_mu = false;

  auto* rr = app.add_subcommand("rr", "Riemann-Roch space L(D)");
  rr->add_option("--curve", curve_file, "curve JSON")->required();
  rr->add_option("--divisor", divisor_file, "divisor JSON")->required();

  auto* kz = app.add_subcommand("koszul", "dim K_{p,q}(C, F, L)");
  kz->add_option("--curve", curve_file)->required();
  kz->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
  kz->add_option("--q", q)->required();
  kz->add_option("--F", f_file, "divisor JSON for F")->required();
  kz->add_option("--L", l_file, "divisor JSON for L")->required();
  kz->add_option("--cap", cap, "max entries per differential");

  auto* du = app.add_subcommand("duality", "Koszul duality defects for q = 0, 1, 2");
  du->add_option("--curve", curve_file)->required();
  du->add_option("--L", l_file)->required();
  du->add_option("--max-p", max_p)->check(CLI::NonNegativeNumber);
  du->add_option("--cap", cap);

  auto* mu = app.add_subcommand("mu", "H0(K+L) x H0(K-L+Delta) -> H0(2K+Delta)");
  mu->add_option("--curve", curve_file)->required();
  mu->add_option("--L", l_file)->required();
  mu->add_option("--delta", delta_file)->required();

  auto* an = app.add_subcommand("analyze", "invariants and verdict for Weierstrass data");
  an->add_option("--weierstrass", w_file)->required();
  an->add_flag("--compute-mu", compute_mu, "also compute mu and cross-check the rule");

  auto* ex = app.add_subcommand("examples", "build an example surface");
  ex->add_option("kind", kind)->required()->check(CLI::IsMember({"twist", "d5", "bundle"}));
  ex->add_option("--seed", seed);
  ex->add_option("--out", out_file, "output file (default <kind>.json)");

  auto* st = app.add_subcommand("selftest", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*rr) {
      const CurvePtr C = load_curve(curve_file);
      const Divisor D = load_divisor(C, divisor_file);
      const RRSpace V = rr_basis(C, D);
      emit(json{{"h0", V.dim()}, {"h1", h1(C, D)}, {"basis", basis_strings(V)}});
    } else if (*kz) {
      const CurvePtr C = load_curve(curve_file);
      const KoszulSlot k = koszul_dim(C, p, q, load_divisor(C, f_file), load_divisor(C, l_file), cap);
      emit(json{{"p", k.p}, {"q", k.q}, {"dim", k.dim}});
    } else if (*du) {
      const CurvePtr C = load_curve(curve_file);
      const Divisor L = load_divisor(C, l_file);
      json rows = json::array();
      bool all_zero = true;
      for (int i = 0; i <= max_p; ++i) {
        for (int j = 0; j <= 2; ++j) {
          const int d = duality_defect(C, i, j, L, cap);
          all_zero = all_zero && d == 0;
          rows.push_back(json{{"p", i}, {"q", j}, {"defect", d}});
        }
      }
      emit(json{{"defects", rows}, {"all_zero", all_zero}});
    } else if (*mu) {
      const CurvePtr C = load_curve(curve_file);
      const MuResult m = mu_pi(C, load_divisor(C, l_file), load_divisor(C, delta_file));
      emit(json{{"rank", m.rank},
                {"corank", m.corank},
                {"surjective", m.surjective},
                {"left_dim", m.left_dim},
                {"right_dim", m.right_dim},
                {"target_dim", m.target_dim}});
    } else if (*an) {
      const WeierstrassData W = io::weierstrass_from_json(io::read_json_file(w_file));
      const SurfaceInvariants inv = invariants_from_weierstrass(W);
      const Verdict v = torelli_decide(W, inv, compute_mu);
      emit(json{{"invariants", io::invariants_to_json(inv)}, {"verdict", io::verdict_to_json(v)}});
    } else if (*ex) {
      const WeierstrassData W = make_example(kind, seed);
      if (out_file.empty()) out_file = kind + ".json";
      std::ofstream out(out_file);
      if (!out) throw io::MalformedInput("cannot write " + out_file);
      out << io::weierstrass_to_json(W).dump(2) << '\n';
      const Verdict v = torelli_decide(W, true);
      emit(json{{"file", out_file}, {"verdict", io::verdict_to_json(v)}});
    } else if (*st) {
      return acceptance::report(acceptance::run_all(std::cout), std::cout);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const io::MalformedInput& e) {
    std::cerr << "MalformedInput: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "MalformedInput: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
