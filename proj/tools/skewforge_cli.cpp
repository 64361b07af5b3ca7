#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewforge/error.hpp"
#include "skewforge/hecke.hpp"
#include "skewforge/parser.hpp"
#include "skewforge/presets.hpp"
#include "skewforge/suites.hpp"

using namespace skewforge;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

nlohmann::json describe(const Setting& s) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : s.variables()) {
    nlohmann::json j{{"id", v.id}, {"name", v.name}};
    if (v.row) {
      j["row"] = v.row;
      j["col"] = v.col;
    }
    vars.push_back(std::move(j));
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : s.group().generators()) gens.push_back(to_string(g));
  nlohmann::json mgens = nlohmann::json::array();
  for (const auto& g : s.monoid().generators()) mgens.push_back(to_string(g));
  nlohmann::json gamma = nlohmann::json::array();
  for (const auto& g : s.gamma_gens()) gamma.push_back(s.format(g));
  const char* sep = s.separating() == Tristate::True ? "true" : (s.separating() == Tristate::False ? "false" : "unknown");
  return {{"label", s.label()},
          {"variables", vars},
          {"group", {{"order", s.group().order()}, {"generators", gens}}},
          {"monoid", {{"kind", s.monoid().is_lattice() ? "lattice" : "generated"}, {"generators", mgens}}},
          {"gamma", gamma},
          {"separating", sep}};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SKEWFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("SKEWFORGE_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in invariant skew group rings"};
  app.require_subcommand(1);

  std::string preset_name;
  bool dump = false;
  auto* preset = app.add_subcommand("preset", "Build a named setting and describe it");
  preset->add_option("name", preset_name, "gt(n), gwa(a,q), torus(n,flavor), sym(n), finite, tensor(p1,p2)")
      ->required();
  preset->add_flag("--dump", dump, "Print the full JSON description");

  std::string setting_name, expr1, expr2;
  bool as_json = false;
  auto* eval = app.add_subcommand("eval", "Parse an element and print its canonical form");
  eval->add_option("setting", setting_name)->required();
  eval->add_option("expr", expr1)->required();
  eval->add_flag("--json", as_json);

  auto* mul = app.add_subcommand("mul", "Skew product of two elements");
  mul->add_option("setting", setting_name)->required();
  mul->add_option("x", expr1)->required();
  mul->add_option("y", expr2)->required();
  mul->add_flag("--json", as_json);

  auto* decompose = app.add_subcommand("decompose", "Simple bimodule classes of an invariant element");
  decompose->add_option("setting", setting_name)->required();
  decompose->add_option("expr", expr1)->required();

  auto* hmul = app.add_subcommand("hecke-mul", "b_phi b_psi / |G| in the Hecke algebra");
  hmul->add_option("setting", setting_name)->required();
  hmul->add_option("phi", expr1)->required();
  hmul->add_option("psi", expr2)->required();
  hmul->add_flag("--json", as_json);

  auto* tclasses = app.add_subcommand("tensor-classes", "V(phi) (x) V(psi) as a sum of simple classes");
  tclasses->add_option("setting", setting_name)->required();
  tclasses->add_option("phi", expr1)->required();
  tclasses->add_option("psi", expr2)->required();

  std::string suite;
  std::optional<int> rank;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> gwa_a;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--n", rank, "Rank for gl-relations, oracle-crosscheck and torus");
  verify->add_option("--seed", seed, "Random seed (falls back to SKEWFORGE_SEED)");
  verify->add_option("--a", gwa_a, "Polynomial in t for the gwa suite");
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*preset) {
      const auto s = build_preset(preset_name);
      if (dump) {
        std::cout << describe(*s).dump(2) << "\n";
      } else {
        std::cout << s->label() << ": " << s->nvars() << " variables, |G| = " << s->group().order() << ", M "
                  << (s->monoid().is_lattice() ? "lattice of rank " : "generated by ") << s->monoid().rank()
                  << (s->monoid().is_lattice() ? "" : " elements") << "\n";
      }
      return kOk;
    }
    if (*verify) {
      SuiteOptions o;
      o.n = rank;
      o.seed = resolve_seed(seed);
      o.a = gwa_a;
      const SuiteReport r = run_suite(suite, o);
      if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
      } else {
        std::cout << format_report(r);
      }
      return r.ok() ? kOk : kCheckFailed;
    }

    const auto s = build_preset(setting_name);
    if (*eval || *mul) {
      SkewElement x = parse_element(s, expr1);
      if (*mul) x = skew_mul(x, parse_element(s, expr2));
      if (as_json) {
        std::cout << element_to_json(x).dump(2) << "\n";
      } else {
        std::cout << format_element(x) << "\n";
      }
      return kOk;
    }
    if (*decompose) {
      const InvariantElement x = parse_invariant(s, expr1);
      for (const auto& c : decompose_bimodule_classes(x)) {
        std::cout << "V[" << to_string(c.rep) << "] dim " << c.orbit_size << "\n";
      }
      return kOk;
    }
    const AffineAut phi = parse_aut(s, expr1);
    const AffineAut psi = parse_aut(s, expr2);
    const auto& g = s->group();
    if (*hmul) {
      const auto prod = hecke_scaled(hecke_mul(g, hecke_basis(g, phi), hecke_basis(g, psi)),
                                     Rational(1, static_cast<long>(g.order())));
      if (as_json) {
        std::cout << hecke_to_json(prod).dump(2) << "\n";
      } else {
        std::cout << format_hecke(prod) << "\n";
      }
      return kOk;
    }
    if (*tclasses) {
      for (const auto& [c, m] : tensor_decompose(g, phi, psi)) {
        std::cout << m.get_str() << " x V[" << to_string(c.rep) << "] dim " << c.orbit_size << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
