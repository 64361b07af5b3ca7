#include <random>

#include "doctest.h"
#include "skewforge/error.hpp"
#include "skewforge/hecke.hpp"
#include "skewforge/presets.hpp"
#include "support.hpp"

using namespace skewforge;
using skewforge::testing::random_generic_tableau;
using skewforge::testing::random_nonzero_poly;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

bool all_ok(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.ok()) {
      MESSAGE(c.name << " residual " << format_element(c.residual));
      return false;
    }
  }
  return true;
}

GTState single(const Setting& s, const std::vector<Rational>& base, std::vector<long> m) {
  GTState st;
  st.base = base;
  st.amplitudes.emplace(std::move(m), Rational(1));
  return st;
}

}  // namespace

TEST_CASE("gt settings have the expected shape") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = build_gt(n);
    const auto nn = static_cast<std::size_t>(n);
    CHECK(s->nvars() == nn * (nn + 1) / 2);
    std::size_t order = 1;
    for (std::size_t i = 1; i <= nn; ++i) order *= factorial(i);
    CHECK(s->group().order() == order);
    CHECK(s->monoid().rank() == nn * (nn - 1) / 2);
    CHECK(s->gamma_gens().size() == nn * (nn + 1) / 2);
    CHECK(normalizes_check(s->group(), s->monoid()));
    CHECK(s->separating() != Tristate::False);
    CHECK(gt_rank(*s) == n);
  }
  const auto s3 = build_gt(3);
  CHECK(s3->at(2, 1) == s3->lookup("l21"));
  CHECK(s3->group().order() == 12);
}

TEST_CASE("gt generator images, n = 2") {
  const auto s = build_gt(2);
  const RatFunc l11 = s->parse("l11"), l21 = s->parse("l21"), l22 = s->parse("l22");
  const AffineAut d = gt_delta(*s, 1, 1);

  const SkewElement ep = gt_generator_image(s, 1, 1).element();
  REQUIRE(ep.size() == 1);
  // With the shift on the right the coefficient is the textbook a^+.
  CHECK(ep.right_coefficient(d) == -(l21 - l11) * (l22 - l11));
  CHECK(ep.coefficient(d) == -(l21 - l11 - 1) * (l22 - l11 - 1));

  const SkewElement em = gt_generator_image(s, 1, -1).element();
  REQUIRE(em.size() == 1);
  CHECK(em.coefficient(invert(d)) == RatFunc(1));

  CHECK_THROWS_AS(gt_generator_image(s, 0, 1), Error);
  CHECK_THROWS_AS(gt_generator_image(s, 2, -1), Error);
  try {
    gt_generator_image(s, 2, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("gt generator images expand to the orbit sum, n = 3") {
  const auto s = build_gt(3);
  auto v = [&](const char* name) { return s->parse(name); };
  for (int sign : {1, -1}) {
    const SkewElement e2 = gt_generator_image(s, 2, sign).element();
    REQUIRE(e2.size() == 2);
    for (int i = 1; i <= 2; ++i) {
      const AffineAut d = gt_delta(*s, 2, i);
      const AffineAut m = sign > 0 ? d : invert(d);
      // Hand-written a^{+-}_{2i}.
      const RatFunc li = v(i == 1 ? "l21" : "l22");
      const RatFunc lo = v(i == 1 ? "l22" : "l21");
      RatFunc a = sign > 0 ? -(v("l31") - li) * (v("l32") - li) * (v("l33") - li) / (lo - li)
                           : (v("l11") - li) / (lo - li);
      CHECK(e2.right_coefficient(m) == a);
    }
  }
  // E_1^+ only touches l11.
  const SkewElement e1 = gt_generator_image(s, 1, 1).element();
  REQUIRE(e1.size() == 1);
  CHECK(e1.right_coefficient(gt_delta(*s, 1, 1)) == -(v("l21") - v("l11")) * (v("l22") - v("l11")));
}

TEST_CASE("gl_n relations hold exactly") {
  const auto s2 = build_gt(2);
  const auto checks = gt_verify_relations(s2);
  CHECK(all_ok(checks));
  const SkewElement h = commutator(gt_generator_image(s2, 1, 1).element(), gt_generator_image(s2, 1, -1).element());
  CHECK(h == SkewElement::scalar(s2, s2->parse("l21 + l22 - 2*l11 - 1")));

  const auto s3 = build_gt(3);
  const auto c3 = gt_relation_checks(s3);
  CHECK(c3.size() > 10);
  CHECK(all_ok(c3));
  CHECK(commutator(gt_generator_image(s3, 1, 1).element(), gt_generator_image(s3, 2, -1).element()).is_zero());
  CHECK(gt_relation_checks(build_gt(1)).empty());
}

TEST_CASE("a broken generator is reported with its residual") {
  const auto s = build_gt(2);
  const SkewElement ep = gt_generator_image(s, 1, 1).element();
  const SkewElement em = gt_generator_image(s, 1, -1).element().scaled(RatFunc(2));
  // With E^- doubled the Cartan constant doubles and the check must notice.
  const SkewElement h = commutator(ep, em);
  CHECK_FALSE((commutator(h, ep) - ep.scaled(RatFunc(2))).is_zero());
}

TEST_CASE("gt module action, worked values") {
  const auto s = build_gt(2);
  // Variable order is l11, l21, l22; the tableau (l21, l22, l11) = (1/2, 5/3, 1/7).
  const std::vector<Rational> base{Rational(1, 7), Rational(1, 2), Rational(5, 3)};
  const GTState v0 = gt_basis_state(*s, base);

  const GTState lowered = gt_module_act(*s, v0, 1, -1);
  CHECK(lowered == single(*s, base, {-1}));

  const GTState up = gt_module_act(*s, v0, 1, 1);
  // a^+(l) = -(1/2 - 1/7)(5/3 - 1/7)
  CHECK(up.amplitudes.at({1}) == -(Rational(1, 2) - Rational(1, 7)) * (Rational(5, 3) - Rational(1, 7)));

  // E+E- - E-E+ at m = 0: -(A+1)(B+1) + AB = -(A + B) - 1 with A, B the row
  // differences. This is h_1 read at -l: -1/2 - 5/3 + 2/7 - 1 = -121/42.
  GTState comm = gt_module_act(*s, gt_module_act(*s, v0, 1, -1), 1, 1);
  const GTState other = gt_module_act(*s, gt_module_act(*s, v0, 1, 1), 1, -1);
  for (const auto& [m, a] : other.amplitudes) comm.amplitudes[m] -= a;
  CHECK(comm.amplitudes.size() == 1);
  CHECK(comm.amplitudes.at({0}) == Rational(-121, 42));

  const SkewElement h = commutator(gt_generator_image(s, 1, 1).element(), gt_generator_image(s, 1, -1).element());
  CHECK(gt_symbolic_act(h, v0).amplitudes.at({0}) == Rational(-121, 42));
  // The coefficient of h_1 itself at l.
  CHECK(h.coefficient(AffineAut::identity(3)).evaluate(base) == Rational(37, 42));
}

TEST_CASE("non-generic tableaux are rejected") {
  const auto s = build_gt(2);
  const std::vector<Rational> bad{Rational(1, 7), Rational(1, 2), Rational(5, 2)};
  CHECK_THROWS_AS(gt_basis_state(*s, bad), Error);
  try {
    gt_check_generic(*s, bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonGenericTableau);
  }
  const std::vector<Rational> cross{Rational(3, 2), Rational(1, 2), Rational(5, 3)};
  CHECK_THROWS_AS(gt_check_generic(*s, cross), Error);
}

TEST_CASE("symbolic action agrees with the module formulas on random words") {
  std::mt19937_64 rng(20261019);
  for (int n : {2, 3}) {
    const auto s = build_gt(n);
    std::vector<std::pair<int, int>> letters;
    std::vector<SkewElement> images;
    for (int k = 1; k < n; ++k) {
      for (int sign : {1, -1}) {
        letters.emplace_back(k, sign);
        images.push_back(gt_generator_image(s, k, sign).element());
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> len(1, 4);
    for (int w = 0; w < 25; ++w) {
      std::vector<std::size_t> word(static_cast<std::size_t>(len(rng)));
      for (auto& l : word) l = pick(rng);
      SkewElement product = SkewElement::scalar(s, RatFunc(1));
      for (auto l : word) product = product * images[l];
      for (int t = 0; t < 2; ++t) {
        const GTState v0 = gt_basis_state(*s, random_generic_tableau(rng, *s));
        GTState step = v0;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          step = gt_module_act(*s, step, letters[*it].first, letters[*it].second);
        }
        CHECK(gt_symbolic_act(product, v0) == step);
      }
    }
  }
}

TEST_CASE("gt generators generate M as a semigroup") {
  for (int n = 2; n <= 3; ++n) {
    const auto s = build_gt(n);
    std::vector<InvariantElement> gens;
    for (int k = 1; k < n; ++k) {
      gens.push_back(gt_generator_image(s, k, 1));
      gens.push_back(gt_generator_image(s, k, -1));
    }
    CHECK(galois_generator_check(*s, gens));
    // Raising operators alone miss the negative directions.
    std::vector<InvariantElement> up;
    for (int k = 1; k < n; ++k) up.push_back(gt_generator_image(s, k, 1));
    CHECK_FALSE(galois_generator_check(*s, up));
  }
}

TEST_CASE("generalized Weyl algebras") {
  const GwaPreset w = build_gwa("t");
  const auto& s = w.setting;
  const SkewElement& X = w.X.element();
  const SkewElement& Y = w.Y.element();
  CHECK(Y * X == SkewElement::scalar(s, s->parse("t")));
  CHECK(X * Y == SkewElement::scalar(s, s->parse("t - 1")));
  CHECK(X * Y - Y * X == SkewElement::scalar(s, RatFunc(-1)));
  // x = X, d = Y: dx - xd = 1.
  CHECK(commutator(Y, X) == SkewElement::scalar(s, RatFunc(1)));

  const GwaPreset laurent = build_gwa("1");
  CHECK(laurent.X.element() * laurent.Y.element() == SkewElement::scalar(laurent.setting, RatFunc(1)));
  CHECK(laurent.Y.element() * laurent.X.element() == SkewElement::scalar(laurent.setting, RatFunc(1)));

  const GwaPreset sq = build_gwa("t^2 + 1");
  CHECK(sq.X.element() * sq.Y.element() == SkewElement::scalar(sq.setting, sq.setting->parse("(t - 1)^2 + 1")));

  const GwaPreset half = build_gwa("t^2 + 1", Rational(1, 2));
  CHECK(half.X.element() * half.Y.element() ==
        SkewElement::scalar(half.setting, half.setting->parse("(t - 1/2)^2 + 1")));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const Poly a = random_nonzero_poly(rng, 1, 5, 4);
    for (const Rational& q : {Rational(1), Rational(2), Rational(1, 2)}) CHECK(all_ok(gwa_relation_checks(build_gwa(a, q))));
  }
  CHECK_THROWS_AS(build_gwa("0"), Error);
  CHECK_THROWS_AS(build_gwa("t", Rational(0)), Error);
}

TEST_CASE("torus flavors") {
  const TorusPreset p1 = build_torus(1, TorusFlavor::Plain);
  CHECK(commutator(p1.d[0], p1.x[0]) == SkewElement::scalar(p1.setting, RatFunc(1)));

  const TorusPreset sym = build_torus(2, TorusFlavor::Symmetric);
  const auto& s = sym.setting;
  SkewElement expect = sym.x[0] + sym.x[1];
  CHECK(sym.invariant_gens[0].element() == expect);
  for (const auto& g : sym.invariant_gens) CHECK(is_invariant(g.element()));

  const TorusPreset odd = build_torus(1, TorusFlavor::OrthogonalOdd);
  CHECK(odd.setting->group().order() == 2);
  const AffineAut eps = odd.setting->group().elements()[1];
  CHECK(apply_automorphism(compose(eps, eps), odd.setting->parse("t1")) == odd.setting->parse("t1"));
  CHECK(apply_automorphism(eps, odd.setting->parse("t1")) == odd.setting->parse("2 - t1"));
  CHECK(commutator(odd.d[0], odd.x[0]) == SkewElement::scalar(odd.setting, RatFunc(1)));

  for (int n = 1; n <= 3; ++n) {
    for (auto f : {TorusFlavor::Plain, TorusFlavor::Symmetric, TorusFlavor::OrthogonalOdd, TorusFlavor::OrthogonalEven}) {
      if (f == TorusFlavor::OrthogonalEven && n < 2) {
        try {
          build_torus(n, f);
          FAIL("expected UnsupportedFlavor");
        } catch (const Error& e) {
          CHECK(e.code() == Errc::UnsupportedFlavor);
        }
        continue;
      }
      const TorusPreset p = build_torus(n, f);
      INFO(p.setting->label());
      CHECK(all_ok(torus_relation_checks(p)));
    }
  }
  CHECK(build_torus(3, TorusFlavor::OrthogonalOdd).setting->group().order() == 48);
  CHECK(build_torus(3, TorusFlavor::OrthogonalEven).setting->group().order() == 24);
  CHECK(parse_flavor("orthogonal-even") == TorusFlavor::OrthogonalEven);
  CHECK_THROWS_AS(parse_flavor("spin"), Error);
  (void)s;
}

TEST_CASE("tensor products of settings") {
  const TorusPreset a = build_torus(1, TorusFlavor::Plain);
  const TorusPreset b = build_torus(1, TorusFlavor::Plain);
  const TensorProduct t = tensor_product_rings(a.setting, b.setting);
  const TorusPreset two = build_torus(2, TorusFlavor::Plain);
  CHECK(t.setting->nvars() == 2);
  CHECK(t.setting->lookup("t1_1").has_value());
  CHECK(t.setting->lookup("t1_2").has_value());
  CHECK(t.setting->group().order() == two.setting->group().order());
  CHECK(t.setting->monoid().generators() == two.setting->monoid().generators());
  CHECK(t.setting->gamma_gens() == two.setting->gamma_gens());

  const SkewElement x1 = t.lift_left(a.x[0]), d1 = t.lift_left(a.d[0]);
  const SkewElement x2 = t.lift_right(b.x[0]), d2 = t.lift_right(b.d[0]);
  CHECK(format_element(x1) == format_element(SkewElement::term(t.setting, RatFunc(1), two.x[0].terms().begin()->first)));
  CHECK(commutator(d1, x1) == SkewElement::scalar(t.setting, RatFunc(1)));
  CHECK(commutator(x1, d2).is_zero());
  CHECK(commutator(d1, x2).is_zero());
  CHECK(x1 * d2 == d2 * x1);

  const auto g2 = build_gt(2);
  const TensorProduct gg = tensor_product_rings(g2, g2);
  CHECK(gg.setting->group().order() == 4);
  const SkewElement e1 = gg.lift_left(gt_generator_image(g2, 1, 1).element());
  const SkewElement e2 = gg.lift_right(gt_generator_image(g2, 1, -1).element());
  CHECK(e1 * e2 == e2 * e1);
  CHECK(is_invariant(e1));
  CHECK_THROWS_AS(gg.lift_left(a.x[0]), Error);

  const TensorProduct mixed = tensor_product_rings(build_finite(), g2);
  CHECK_FALSE(mixed.setting->monoid().is_lattice());
  CHECK(mixed.setting->lookup("x").has_value());
}

TEST_CASE("gk arithmetic") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const GkBound b = gk_bound(*build_gt(static_cast<int>(n)));
    CHECK(b == GkBound{n * (n + 1) / 2, n * (n - 1) / 2, n * n});
  }
  CHECK(gk_bound(*build_gwa("t").setting) == GkBound{1, 1, 2});
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(gk_bound(*build_torus(static_cast<int>(n), TorusFlavor::Plain).setting) == GkBound{n, n, 2 * n});
  }
  try {
    gk_bound(*build_finite());
    FAIL("expected UnsupportedSetting");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedSetting);
  }
}

TEST_CASE("finite monoid example") {
  const auto s = build_finite();
  CHECK(s->monoid().enumerate(8).complete);
  CHECK(s->monoid().enumerate(8).elements.size() == 2);
  CHECK(finite_class_dimension_sum(s->group(), s->monoid()) == 2);
}

TEST_CASE("preset names") {
  CHECK(build_preset("gt(3)")->label() == "gt(3)");
  CHECK(build_preset("gwa(t^2+1, 1/2)")->label() == "gwa(t^2 + 1,1/2)");
  CHECK(build_preset("torus(2, symmetric)")->group().order() == 2);
  CHECK(build_preset("torus(2)")->label() == "torus(2,plain)");
  CHECK(build_preset("sym(2)")->group().order() == 2);
  CHECK(build_preset("finite")->label() == "finite");
  CHECK(build_preset("tensor(gt(2), torus(1))")->nvars() == 4);
  for (const char* bad : {"gt(", "gt(x)", "nope(1)", "gt(2,3)", "tensor(gt(2))"}) {
    CHECK_THROWS_AS(build_preset(bad), Error);
  }
}
