#include "skewforge/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "skewforge/error.hpp"
#include "skewforge/hecke.hpp"
#include "skewforge/presets.hpp"

namespace skewforge {

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

namespace {

using Rng = std::mt19937_64;

class Collector {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    if (!pass && detail.empty()) detail = "failed";
    checks_.push_back({std::move(name), pass, std::move(detail)});
  }

  void relation(const std::string& prefix, const RelationCheck& c) {
    add(prefix + c.name, c.ok(), c.ok() ? "" : "residual " + format_element(c.residual));
  }

  // Runs fn, turning exceptions into a failed check.
  void guard(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [pass, detail] = fn();
      add(name, pass, std::move(detail));
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  std::vector<SuiteCheck> take() { return std::move(checks_); }

 private:
  std::vector<SuiteCheck> checks_;
};

std::string pad(std::size_t i, int width = 3) {
  std::string s = std::to_string(i);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

Poly random_poly(Rng& rng, std::size_t nvars, int degree, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(0, degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    std::vector<Monomial::Entry> mono;
    int budget = exp(rng);
    while (budget > 0) {
      const int e = std::uniform_int_distribution<int>(1, budget)(rng);
      mono.emplace_back(static_cast<VarId>(var(rng)), e);
      budget -= e;
    }
    out.push_back({Monomial(std::move(mono)), Rational(coeff(rng))});
  }
  return Poly::from_terms(std::move(out));
}

AffineAut random_lattice_element(Rng& rng, const ShiftMonoid& m, int radius, bool nonidentity) {
  std::uniform_int_distribution<int> c(-radius, radius);
  while (true) {
    std::vector<Integer> coords;
    for (std::size_t i = 0; i < m.rank(); ++i) coords.emplace_back(c(rng));
    AffineAut a = m.element(coords);
    if (!nonidentity || !a.is_identity()) return a;
  }
}

// [a phi] with a random coefficient fixed by the stabilizer of phi.
InvariantElement random_orbit_sum(Rng& rng, const SettingPtr& s, const AffineAut& phi) {
  const auto stab = stabilizer_and_orbit(s->group(), phi).stabilizer;
  while (true) {
    const RatFunc p(random_poly(rng, s->nvars(), 2, 3));
    RatFunc a;
    for (const auto& h : stab.elements()) a += apply_automorphism(h, p);
    if (!a.is_zero()) return make_invariant(s, a, phi);
  }
}

RatFunc random_gamma(Rng& rng, const Setting& s) {
  const auto& gens = s.gamma_gens();
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  while (true) {
    RatFunc g(c(rng));
    for (const auto& x : gens) g += x * RatFunc(c(rng));
    g += gens[pick(rng)] * gens[pick(rng)] * RatFunc(c(rng));
    if (!g.is_zero()) return g;
  }
}

std::string aut_set(const std::set<AffineAut>& s) {
  std::string out = "{";
  for (const auto& a : s) out += (out.size() > 1 ? ", " : "") + to_string(a);
  return out + "}";
}

std::vector<int> ranks(const SuiteOptions& o, std::vector<int> defaults) {
  if (o.n) return {*o.n};
  return defaults;
}

// ---------------------------------------------------------------------------

void gl_relations(Collector& out, const SuiteOptions& o) {
  for (int n : ranks(o, {2, 3})) {
    const auto s = build_gt(n);
    const std::string prefix = s->label() + " ";
    for (const auto& c : gt_relation_checks(s)) out.relation(prefix, c);
    if (n == 2) {
      out.guard(prefix + "h(1,1) = l21 + l22 - 2 l11 - 1", [&] {
        const SkewElement h =
            commutator(gt_generator_image(s, 1, 1).element(), gt_generator_image(s, 1, -1).element());
        const SkewElement r = h - SkewElement::scalar(s, s->parse("l21 + l22 - 2*l11 - 1"));
        return std::pair{r.is_zero(), "residual " + format_element(r)};
      });
    }
  }
}

void oracle_crosscheck(Collector& out, const SuiteOptions& o, int words = 200, int tableaux = 5) {
  Rng rng(o.seed);
  for (int n : ranks(o, {2, 3})) {
    const auto s = build_gt(n);
    std::vector<std::pair<int, int>> letters;
    std::vector<SkewElement> images;
    for (int k = 1; k < n; ++k) {
      for (int sign : {1, -1}) {
        letters.emplace_back(k, sign);
        images.push_back(gt_generator_image(s, k, sign).element());
      }
    }
    if (letters.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> num(-60, 60);
    const int dens[] = {7, 11, 13, 17, 19, 23};
    std::uniform_int_distribution<std::size_t> den(0, 5);
    auto random_tableau = [&] {
      while (true) {
        std::vector<Rational> base;
        for (std::size_t v = 0; v < s->nvars(); ++v) base.push_back(make_rational(num(rng), dens[den(rng)]));
        try {
          gt_check_generic(*s, base);
          return base;
        } catch (const Error&) {
        }
      }
    };
    std::size_t agree = 0;
    std::string first_bad;
    for (int w = 0; w < words; ++w) {
      std::vector<std::size_t> word(static_cast<std::size_t>(len(rng)));
      for (auto& l : word) l = pick(rng);
      SkewElement product = SkewElement::scalar(s, RatFunc(1));
      for (auto l : word) product = product * images[l];
      std::string text;
      for (auto l : word) text += "E" + std::to_string(letters[l].first) + (letters[l].second > 0 ? "+" : "-");
      for (int t = 0; t < tableaux; ++t) {
        const GTState v0 = gt_basis_state(*s, random_tableau());
        GTState step = v0;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          step = gt_module_act(*s, step, letters[*it].first, letters[*it].second);
        }
        if (gt_symbolic_act(product, v0) == step) {
          ++agree;
        } else if (first_bad.empty()) {
          first_bad = "word " + text + " disagrees at tableau " + std::to_string(t);
        }
      }
    }
    const std::size_t total = static_cast<std::size_t>(words) * static_cast<std::size_t>(tableaux);
    out.add(s->label() + " symbolic action = module action (" + std::to_string(total) + " cases)", agree == total,
            first_bad);
  }
}

void gwa_suite(Collector& out, const SuiteOptions& o) {
  std::vector<Poly> polys;
  if (o.a) {
    polys.push_back(build_gwa(*o.a).a);
  } else {
    for (const char* a : {"t", "1", "t^2 + 1"}) polys.push_back(build_gwa(a).a);
    Rng rng(o.seed);
    while (polys.size() < 23) {
      Poly p = random_poly(rng, 1, 5, 4);
      if (!p.is_zero()) polys.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const Rational& q : {Rational(1), Rational(2), Rational(1, 2)}) {
      const std::string prefix = "a" + pad(i, 2) + " q=" + q.get_str() + " ";
      std::optional<GwaPreset> p;
      out.guard(prefix + "build", [&] {
        p.emplace(build_gwa(polys[i], q));
        return std::pair{true, std::string()};
      });
      if (p) {
        for (const auto& c : gwa_relation_checks(*p)) out.relation(prefix, c);
      }
    }
  }
  const GwaPreset weyl = build_gwa(Poly::variable(0));
  const SkewElement r = commutator(weyl.Y.element(), weyl.X.element()) - SkewElement::scalar(weyl.setting, RatFunc(1));
  out.add("weyl dx - xd = 1", r.is_zero(), "residual " + format_element(r));
}

void torus_suite(Collector& out, const SuiteOptions& o) {
  for (int n : ranks(o, {1, 2, 3})) {
    for (auto f : {TorusFlavor::Plain, TorusFlavor::Symmetric, TorusFlavor::OrthogonalOdd, TorusFlavor::OrthogonalEven}) {
      if (f == TorusFlavor::OrthogonalEven && n < 2) {
        bool rejected = false;
        try {
          build_torus(n, f);
        } catch (const Error& e) {
          rejected = e.code() == Errc::UnsupportedFlavor;
        }
        out.add("torus(" + std::to_string(n) + ",orthogonal-even) rejected", rejected);
        continue;
      }
      const TorusPreset p = build_torus(n, f);
      for (const auto& c : torus_relation_checks(p)) out.relation(p.setting->label() + " ", c);
    }
  }
}

void hecke_pool(Collector& out, const std::string& prefix, const FiniteGroup& g, const std::vector<AffineAut>& pool) {
  std::vector<AffineAut> reps;
  std::set<DoubleCoset> seen;
  for (const auto& a : pool) {
    if (seen.insert(canonical_double_coset(g, a)).second) reps.push_back(a);
  }
  out.add(prefix + "pool has at least 5 classes", reps.size() >= 5, std::to_string(reps.size()) + " classes");
  const Rational inv(1, static_cast<long>(g.order()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const std::string name = prefix + "pair " + pad(i, 2) + "," + pad(j, 2) + " ";
      const AffineAut& phi = reps[i];
      const AffineAut& psi = reps[j];
      out.guard(name + "integral structure constants", [&] {
        const auto prod = hecke_scaled(hecke_mul(g, hecke_basis(g, phi), hecke_basis(g, psi)), inv);
        for (const auto& [c, v] : prod) {
          if (v < 0 || v.get_den() != 1) return std::pair{false, format_hecke(prod)};
        }
        return std::pair{true, std::string()};
      });
      out.guard(name + "dimension conservation", [&] {
        const ClassSum t = tensor_decompose(g, phi, psi);
        std::size_t total = 0;
        for (const auto& [c, m] : t) total += m.get_ui() * class_dimension(c);
        const std::size_t want = class_dimension(simple_class(g, phi)) * class_dimension(simple_class(g, psi));
        return std::pair{total == want, std::to_string(total) + " != " + std::to_string(want)};
      });
      out.guard(name + "Psi multiplicative", [&] {
        const auto lhs = grothendieck_to_hecke(g, tensor_decompose(g, phi, psi));
        const auto rhs = hecke_mul(g, hecke_scaled(hecke_basis(g, phi), inv), hecke_scaled(hecke_basis(g, psi), inv));
        return std::pair{lhs == rhs, format_hecke(lhs) + " != " + format_hecke(rhs)};
      });
    }
  }
}

void hecke_suite(Collector& out, const SuiteOptions&) {
  const auto s2 = build_symmetric(2);
  auto sh = [](std::vector<Rational> v) { return AffineAut::shift(std::move(v)); };
  hecke_pool(out, "sym(2) ", s2->group(),
             {sh({0, 0}), sh({1, 0}), sh({2, 0}), sh({1, 1}), sh({1, -1}), sh({2, -1}), sh({3, 1})});
  const auto g3 = build_gt(3);
  const auto d = [&](int k, int i) { return gt_delta(*g3, k, i); };
  hecke_pool(out, "gt(3) ", g3->group(),
             {AffineAut::identity(6), d(1, 1), d(2, 1), compose(d(1, 1), d(2, 1)), compose(d(2, 1), invert(d(2, 2))),
              compose(d(1, 1), invert(d(2, 1))), compose(d(2, 1), d(2, 1))});

  out.guard("sym(2) worked product b(1,0)^2 / |G| = b(2,0) + 2 b(1,1)", [&] {
    const auto& g = s2->group();
    const auto got = hecke_scaled(hecke_mul(g, hecke_basis(g, sh({1, 0})), hecke_basis(g, sh({1, 0}))),
                                  Rational(1, static_cast<long>(g.order())));
    const HeckeElement want{{simple_class(g, sh({2, 0})), Rational(1)}, {simple_class(g, sh({1, 1})), Rational(2)}};
    return std::pair{got == want, format_hecke(got)};
  });
}

std::vector<SettingPtr> support_settings() { return {build_gt(2), build_gt(3), build_symmetric(2)}; }

void support_law(Collector& out, const SuiteOptions& o, int pairs = 50) {
  Rng rng(o.seed);
  for (const auto& s : support_settings()) {
    std::size_t agree = 0;
    std::string first_bad;
    for (int i = 0; i < pairs; ++i) {
      const AffineAut phi = random_lattice_element(rng, s->monoid(), 1, false);
      const AffineAut psi = random_lattice_element(rng, s->monoid(), 1, false);
      const InvariantElement x = random_orbit_sum(rng, s, phi);
      const InvariantElement y = random_orbit_sum(rng, s, psi);
      const RatFunc gamma = random_gamma(rng, *s);
      const auto prod = invariant_mul(x, gamma, y);
      const auto supp = support(prod.element());
      const std::set<AffineAut> got(supp.begin(), supp.end());
      const auto want = orbit_product(s->group(), phi, psi);
      if (got == want) {
        ++agree;
      } else if (first_bad.empty()) {
        first_bad = "pair " + std::to_string(i) + ": " + aut_set(got) + " vs " + aut_set(want);
      }
    }
    out.add(s->label() + " supp [a phi] gamma [b psi] = O_phi O_psi (" + std::to_string(pairs) + " pairs)",
            agree == static_cast<std::size_t>(pairs), first_bad);
  }
}

void center_suite(Collector& out, const SuiteOptions& o) {
  Rng rng(o.seed);
  for (int n : {2, 3}) {
    const auto s = build_gt(n);
    const std::string prefix = s->label() + " ";
    // The top-row generators of Gamma are the elementary symmetric polynomials.
    const auto& gens = s->gamma_gens();
    for (std::size_t k = gens.size() - static_cast<std::size_t>(n); k < gens.size(); ++k) {
      out.guard(prefix + "central: " + s->format(gens[k]), [&] {
        return std::pair{center_membership(InvariantElement(SkewElement::scalar(s, gens[k]))), std::string("rejected")};
      });
    }
    out.guard(prefix + "not central: l11", [&] {
      return std::pair{!center_membership(InvariantElement(SkewElement::scalar(s, s->parse("l11")))),
                       std::string("accepted")};
    });
  }
  for (const auto& s : support_settings()) {
    const std::string prefix = s->label() + " ";
    std::size_t found = 0;
    const int trials = 20;
    std::string first_bad;
    for (int i = 0; i < trials; ++i) {
      const AffineAut phi = random_lattice_element(rng, s->monoid(), 2, true);
      InvariantElement x = random_orbit_sum(rng, s, phi);
      if (i % 2 == 1) x = x + InvariantElement(SkewElement::scalar(s, random_gamma(rng, *s)));
      const auto w = noncommute_witness(x);
      const bool good = w && !commutator(x.element(), SkewElement::scalar(s, *w)).is_zero();
      if (good) {
        ++found;
      } else if (first_bad.empty()) {
        first_bad = "no witness for " + format_element(x.element());
      }
    }
    out.add(prefix + "noncommuting witness for " + std::to_string(trials) + " elements", found == trials, first_bad);

    std::size_t whole = 0;
    for (int i = 0; i < trials; ++i) {
      std::vector<AffineAut> sset;
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int j = 0; j < k; ++j) sset.push_back(random_lattice_element(rng, s->monoid(), 3, false));
      if (ideal_support_closure(*s, sset).whole_monoid) ++whole;
    }
    out.add(prefix + "ideal closure is whole monoid for " + std::to_string(trials) + " sets", whole == trials,
            std::to_string(trials - whole) + " proper ideals");
  }
}

using SuiteFn = std::function<void(Collector&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"gl-relations", gl_relations},
      {"gwa", gwa_suite},
      {"torus", torus_suite},
      {"hecke", hecke_suite},
      {"support-law", [](Collector& c, const SuiteOptions& o) { support_law(c, o); }},
      {"center", center_suite},
      {"oracle-crosscheck", [](Collector& c, const SuiteOptions& o) { oracle_crosscheck(c, o); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  if (name == "all") {
    for (const auto& [suite, fn] : registry()) {
      Collector c;
      fn(c, options);
      for (auto& check : c.take()) {
        check.name = suite + "/" + check.name;
        report.checks.push_back(std::move(check));
      }
    }
  } else {
    const auto& r = registry();
    const auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == name; });
    if (it == r.end()) throw Error(Errc::UnknownSuite, "no suite named '" + std::string(name) + "'");
    Collector c;
    it->second(c, options);
    report.checks = c.take();
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "pass  " : "FAIL  ") << c.name;
    if (!c.pass) out << "\n      " << c.detail;
    out << "\n";
  }
  out << r.suite << ": " << (r.checks.size() - r.failed()) << "/" << r.checks.size() << " passed\n";
  return out.str();
}

nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) j["residual"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite},
          {"passed", r.checks.size() - r.failed()},
          {"failed", r.failed()},
          {"elapsed_seconds", r.elapsed_seconds},
          {"checks", checks}};
}

}  // namespace skewforge
