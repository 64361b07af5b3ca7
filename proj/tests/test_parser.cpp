#include <algorithm>
#include <random>

#include "doctest.h"
#include "skewforge/error.hpp"
#include "skewforge/parser.hpp"
#include "skewforge/presets.hpp"
#include "skewforge/suites.hpp"
#include "support.hpp"

using namespace skewforge;
using skewforge::testing::random_poly;
using skewforge::testing::random_rational;

namespace {

std::size_t syntax_offset(const SettingPtr& s, const char* text) {
  try {
    parse_element(s, text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

// A random automorphism: a lattice element or M element, sometimes twisted by G.
AffineAut random_aut(std::mt19937_64& rng, const Setting& s) {
  AffineAut m = AffineAut::identity(s.nvars());
  if (s.monoid().is_lattice()) {
    std::uniform_int_distribution<int> c(-2, 2);
    std::vector<Integer> coords;
    for (std::size_t i = 0; i < s.monoid().rank(); ++i) coords.emplace_back(c(rng));
    m = s.monoid().element(coords);
  } else {
    const auto all = s.monoid().enumerate(8).elements;
    m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  }
  if (rng() % 3 == 0) {
    const auto& g = s.group().elements();
    m = compose(g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)], m);
  }
  return m;
}

SkewElement random_element(std::mt19937_64& rng, const SettingPtr& s) {
  SkewElement x(s);
  const int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    RatFunc c(random_poly(rng, s->nvars(), 2, 3));
    if (rng() % 2 == 0) {
      const Poly d = random_poly(rng, s->nvars(), 1, 2);
      if (!d.is_zero()) c = c / RatFunc(d);
    }
    c = c * RatFunc(random_rational(rng));
    x.add_term(random_aut(rng, *s), c);
  }
  return x;
}

}  // namespace

TEST_CASE("bracket and sum examples") {
  const auto g2 = build_gt(2);
  const SkewElement one = parse_element(g2, "[1 * d(1,1)]");
  CHECK(one == SkewElement::term(g2, RatFunc(1), gt_delta(*g2, 1, 1)));

  const SkewElement sum = parse_element(g2, "[(l21 + l22 - 2*l11) * d(1,1)] + [1 * d(1,1)]");
  CHECK(sum == SkewElement::term(g2, g2->parse("l21 + l22 - 2*l11 + 1"), gt_delta(*g2, 1, 1)));

  // The row-2 swap fixes d(1,1) but moves l21 - l11.
  try {
    parse_element(g2, "[(l21-l11) * d(1,1)] + [1 * d(1,1)]");
    FAIL("expected NotStabilizerInvariant");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotStabilizerInvariant);
  }

  // Orbit sums in gt(3).
  const auto g3 = build_gt(3);
  const SkewElement e2 = parse_element(g3, "[1 * d(2,1)]");
  CHECK(e2 == parse_element(g3, "d(2,1) + d(2,2)"));
  CHECK(parse_invariant(g3, "[l11 * d(2,1)^-1]").element().size() == 2);
  CHECK_THROWS_AS(parse_invariant(g3, "d(2,1)"), Error);
}

TEST_CASE("operators") {
  const auto w = build_gwa("t").setting;
  CHECK(parse_element(w, "t*s(1)^-1 * s(1)") == parse_element(w, "t"));
  CHECK(parse_element(w, "s(1) * t") == parse_element(w, "(t - 1)*s(1)"));
  CHECK(parse_element(w, "s(1)^3") == parse_element(w, "shift(-3)"));
  CHECK(parse_element(w, "s(1)^-2") == parse_element(w, "shift(2)"));
  CHECK(parse_element(w, "1/(t+1) * s(1)") == SkewElement::term(w, w->parse("1/(t+1)"), AffineAut::shift({-1})));
  CHECK(parse_element(w, "(t*s(1)) / s(1)") == parse_element(w, "t"));
  CHECK(parse_element(w, "-t^2 + 3") == SkewElement::scalar(w, w->parse("3 - t^2")));
  CHECK(parse_element(w, "2 - 2") == SkewElement(w));
  CHECK(parse_element(w, "[0 * s(1)]").is_zero());

  const auto s2 = build_symmetric(2);
  CHECK(parse_element(s2, "aff(1,0;1,1;0,0)") == SkewElement::term(s2, RatFunc(1), AffineAut::permutation({1, 0})));
  CHECK(parse_element(s2, "shift(1/2,-3)") ==
        SkewElement::term(s2, RatFunc(1), AffineAut::shift({Rational(1, 2), Rational(-3)})));
  CHECK(parse_aut(s2, " shift(1,0) ") == AffineAut::shift({1, 0}));
  CHECK(parse_aut(s2, "e") == AffineAut::identity(2));
}

TEST_CASE("syntax errors carry offsets") {
  const auto s2 = build_symmetric(2);
  CHECK(syntax_offset(s2, "[x1 * ") == 6);
  CHECK(syntax_offset(s2, "x1 +") == 4);
  CHECK(syntax_offset(s2, "x3") == 0);
  CHECK(syntax_offset(s2, "x1 x2") == 3);
  CHECK(syntax_offset(s2, "(x1") == 3);
  CHECK(syntax_offset(s2, "shift(1)") == 0);
  CHECK(syntax_offset(s2, "s(3)") == 0);
  CHECK(syntax_offset(s2, "d(1,1)") == 0);
  CHECK(syntax_offset(s2, "x1 / (x1 + x2*shift(1,0))") == 3);
  CHECK(syntax_offset(s2, "[x1*shift(1,0) + shift(0,1)]") == 0);
  CHECK(syntax_offset(s2, "shift(1/0,1)") == 8);
  CHECK(syntax_offset(s2, "aff(0,0;1,1;0,0)") == 0);
  CHECK(syntax_offset(s2, "x1 ^ y") == 5);
}

TEST_CASE("canonical prints read back") {
  std::mt19937_64 rng(99);
  const std::vector<SettingPtr> settings{build_gt(2),
                                         build_gt(3),
                                         build_symmetric(2),
                                         build_gwa("t^2 + 1", Rational(1, 2)).setting,
                                         build_torus(2, TorusFlavor::OrthogonalOdd).setting,
                                         build_finite(),
                                         build_preset("tensor(gt(2),torus(1))")};
  for (const auto& s : settings) {
    for (int i = 0; i < 100; ++i) {
      const SkewElement x = random_element(rng, s);
      const std::string text = format_element(x);
      INFO(s->label() << ": " << text);
      CHECK(parse_element(s, text) == x);
      CHECK(format_element(parse_element(s, text)) == text);
    }
  }
}

TEST_CASE("suites") {
  SuiteOptions weyl;
  weyl.a = "t";
  const SuiteReport gwa = run_suite("gwa", weyl);
  CHECK(gwa.ok());
  CHECK(gwa.checks.size() > 10);

  SuiteOptions two;
  two.n = 2;
  const SuiteReport gl = run_suite("gl-relations", two);
  CHECK(gl.ok());
  const auto h = std::find_if(gl.checks.begin(), gl.checks.end(),
                              [](const auto& c) { return c.name.find("h(1,1) =") != std::string::npos; });
  REQUIRE(h != gl.checks.end());
  CHECK(h->pass);
  CHECK(std::is_sorted(gl.checks.begin(), gl.checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));

  try {
    run_suite("nope");
    FAIL("expected UnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownSuite);
  }
  CHECK(std::find(suite_names().begin(), suite_names().end(), "all") != suite_names().end());

  const auto j = report_to_json(gl);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == gl.checks.size());
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(format_report(gl).find("gl-relations: ") != std::string::npos);
}

TEST_CASE("failure reports carry residuals") {
  SuiteReport r;
  r.suite = "demo";
  r.checks.push_back({"a", true, ""});
  r.checks.push_back({"b", false, "residual (1)*e"});
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.ok());
  const auto j = report_to_json(r);
  CHECK(j["failed"] == 1);
  CHECK(j["checks"][1]["residual"] == "residual (1)*e");
  CHECK(format_report(r).find("FAIL  b\n      residual (1)*e") != std::string::npos);
}
