#include <map>
#include <set>

#include "doctest.h"
#include "skewforge/error.hpp"
#include "skewforge/hecke.hpp"
#include "skewforge/skew.hpp"
#include "hecke_oracle.hpp"

using namespace skewforge;
using namespace skewforge::testing;

namespace {

AffineAut sh(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return AffineAut::shift(out);
}

const AffineAut kSwap = AffineAut::permutation({1, 0});

FiniteGroup s2() {
  const std::vector<AffineAut> gens{kSwap};
  return group_closure(gens, 2);
}

// Rows (l31 l32 l33 | l21 l22 | l11): S_3 x S_2 x S_1.
FiniteGroup gt3_group() {
  const std::vector<AffineAut> gens{
      AffineAut::permutation({1, 0, 2, 3, 4, 5}),
      AffineAut::permutation({0, 2, 1, 3, 4, 5}),
      AffineAut::permutation({0, 1, 2, 4, 3, 5}),
  };
  return group_closure(gens, 6);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::ParseError;
}

void check_pool(const FiniteGroup& g, const std::vector<AffineAut>& pool) {
  const Rational inv_order(1, static_cast<long>(g.order()));
  for (const auto& phi : pool) {
    for (const auto& psi : pool) {
      CAPTURE(to_string(phi));
      CAPTURE(to_string(psi));
      const HeckeElement prod = hecke_mul(g, hecke_basis(g, phi), hecke_basis(g, psi));
      // Integrality of (1/|G|) b b.
      for (const auto& [c, v] : hecke_scaled(prod, inv_order)) {
        CHECK(v.get_den() == 1);
        CHECK(v > 0);
      }
      // Agreement with the group algebra product.
      CHECK(to_group_algebra(g, prod) == convolve(coset_sum(g, phi), coset_sum(g, psi)));

      const ClassSum t = tensor_decompose(g, phi, psi);
      std::size_t dim = 0;
      for (const auto& [c, m] : t) {
        CHECK(m > 0);
        dim += class_dimension(c) * m.get_ui();
      }
      CHECK(dim == class_dimension(simple_class(g, phi)) * class_dimension(simple_class(g, psi)));

      const auto brute = brute_force_tensor(g, phi, psi);
      std::map<AffineAut, Rational> fast;
      for (const auto& [c, m] : t) fast[c.rep] = Rational(m);
      CHECK(brute == fast);
      const auto family = tensor_family(g, phi, psi);
      for (const auto& [c, m] : t) CHECK(multiplicity_from_family(g, family, c.rep) == Rational(m));

      // Psi is multiplicative.
      const auto lhs = grothendieck_to_hecke(g, t);
      const auto rhs = hecke_mul(g, grothendieck_to_hecke(g, {{simple_class(g, phi), 1}}),
                                 grothendieck_to_hecke(g, {{simple_class(g, psi), 1}}));
      CHECK(lhs == rhs);
    }
  }
}

}  // namespace

TEST_CASE("class dimensions") {
  const FiniteGroup g = s2();
  CHECK(class_dimension(simple_class(g, AffineAut::identity(2))) == 1);
  CHECK(class_dimension(simple_class(g, sh({1, 0}))) == 2);
  const std::vector<AffineAut> row2{AffineAut::permutation({1, 0, 2})};
  CHECK(class_dimension(simple_class(group_closure(row2, 3), sh({0, 0, 1}))) == 1);
}

TEST_CASE("worked S2 tensor and Hecke product") {
  const FiniteGroup g = s2();
  const AffineAut phi = sh({1, 0});
  const AffineAut twisted = compose(kSwap, sh({1, 1}));

  const ClassSum t = tensor_decompose(g, phi, phi);
  REQUIRE(t.size() == 2);
  CHECK(t.at(simple_class(g, sh({2, 0}))) == 1);
  CHECK(t.at(simple_class(g, twisted)) == 2);
  CHECK(class_dimension(simple_class(g, sh({2, 0}))) == 2);
  CHECK(class_dimension(simple_class(g, twisted)) == 1);
  CHECK(simple_class(g, twisted).has_pure_shift);  // swap (1,1) and (1,1) share a double coset

  const auto normalized = hecke_scaled(hecke_mul(g, hecke_basis(g, phi), hecke_basis(g, phi)), Rational(1, 2));
  const HeckeElement expected{{simple_class(g, sh({2, 0})), Rational(1)}, {simple_class(g, twisted), Rational(2)}};
  CHECK(normalized == expected);

  // The brute-force oracle reproduces it.
  const auto brute = brute_force_tensor(g, phi, phi);
  CHECK(brute.at(simple_class(g, sh({2, 0})).rep) == 1);
  CHECK(brute.at(simple_class(g, twisted).rep) == 2);

  // Psi is multiplicative: Psi(V (x) V) = Psi(V)^2 = b_phi^2 / |G|^2.
  CHECK(grothendieck_to_hecke(g, t) == hecke_scaled(normalized, Rational(1, 2)));
}

TEST_CASE("unit and trivial-group cases") {
  const FiniteGroup g = s2();
  const AffineAut e = AffineAut::identity(2);
  const AffineAut phi = sh({3, -1});
  CHECK(hecke_mul(g, hecke_basis(g, e), hecke_basis(g, phi)) == hecke_scaled(hecke_basis(g, phi), Rational(2)));
  const ClassSum unit = tensor_decompose(g, e, phi);
  CHECK(unit == ClassSum{{simple_class(g, phi), 1}});

  const FiniteGroup triv = FiniteGroup::trivial(2);
  const AffineAut psi = sh({0, 5});
  CHECK(hecke_mul(triv, hecke_basis(triv, phi), hecke_basis(triv, psi)) == hecke_basis(triv, compose(phi, psi)));
  CHECK(tensor_decompose(triv, phi, psi) == ClassSum{{simple_class(triv, compose(phi, psi)), 1}});

  const ClassSum two{{simple_class(g, e), 1}, {simple_class(g, phi), 2}};
  const HeckeElement psi_two{{simple_class(g, e), Rational(1, 2)}, {simple_class(g, phi), Rational(1)}};
  CHECK(grothendieck_to_hecke(g, two) == psi_two);
}

TEST_CASE("multiplicities from families") {
  const FiniteGroup g = s2();
  const AffineAut phi = sh({1, 0});
  const auto orbit = stabilizer_and_orbit(g, phi).orbit;
  CHECK(multiplicity_from_family(g, orbit, phi) == 1);
  std::vector<AffineAut> twice = orbit;
  twice.insert(twice.end(), orbit.begin(), orbit.end());
  CHECK(multiplicity_from_family(g, twice, phi) == 2);
  CHECK(code_of([&] { multiplicity_from_family(g, {phi}, phi); }) == Errc::NotGInvariantFamily);
}

TEST_CASE("pool consistency on the S2 lattice") {
  const FiniteGroup g = s2();
  check_pool(g, {AffineAut::identity(2), sh({1, 0}), sh({1, 1}), sh({2, -1}), compose(kSwap, sh({1, 1})),
                 sh({0, -3})});
}

TEST_CASE("pool consistency for gl_3 data") {
  const FiniteGroup g = gt3_group();
  REQUIRE(g.order() == 12);
  check_pool(g, {AffineAut::identity(6), sh({0, 0, 0, 0, 0, 1}), sh({0, 0, 0, 1, 0, 0}),
                 sh({0, 0, 0, 1, 0, 1}), sh({0, 0, 0, 0, -1, 0}), sh({0, 0, 0, 1, 1, -1})});
}

TEST_CASE("associativity of the Hecke product") {
  const FiniteGroup g = s2();
  const std::vector<AffineAut> pool{sh({1, 0}), compose(kSwap, sh({1, 1})), sh({2, -1})};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        const auto ba = hecke_basis(g, a);
        const auto bb = hecke_basis(g, b);
        const auto bc = hecke_basis(g, c);
        CHECK(hecke_mul(g, hecke_mul(g, ba, bb), bc) == hecke_mul(g, ba, hecke_mul(g, bb, bc)));
      }
    }
  }
}

TEST_CASE("ring products see the pure-shift classes of the tensor") {
  std::vector<Variable> v{{0, "x1", 0, 0}, {1, "x2", 0, 0}};
  const FiniteGroup g = s2();
  const auto s = std::make_shared<Setting>(
      "s2", v, g, ShiftMonoid::lattice({{1, 0}, {0, 1}}, 2),
      std::vector<RatFunc>{RatFunc::variable(0) + RatFunc::variable(1), RatFunc::variable(0) * RatFunc::variable(1)});
  const std::vector<AffineAut> pool{sh({1, 0}), sh({1, 1}), sh({2, -1}), sh({0, 3})};
  for (const auto& phi : pool) {
    for (const auto& psi : pool) {
      const auto x = make_invariant(s, RatFunc(1), phi);
      const auto y = make_invariant(s, RatFunc(1), psi);
      const auto prod = invariant_mul(x, s->gamma_gens()[1] + RatFunc(2), y);
      const auto ring = decompose_bimodule_classes(prod);
      std::set<AffineAut> ring_reps;
      for (const auto& c : ring) ring_reps.insert(c.rep);
      std::set<AffineAut> tensor_reps;
      for (const auto& [c, m] : tensor_decompose(g, phi, psi)) {
        if (c.has_pure_shift) tensor_reps.insert(c.rep);
      }
      CHECK(ring_reps == tensor_reps);
    }
  }
}

TEST_CASE("finite monoid dimension sum") {
  const FiniteGroup g = s2();
  const AffineAut neg({0, 1}, {Rational(-1), Rational(-1)}, {Rational(0), Rational(0)});
  const auto m = ShiftMonoid::generated({neg}, 2);
  CHECK(finite_class_dimension_sum(g, m) == 2);
  const auto nat = ShiftMonoid::generated({sh({1, 0})}, 2);
  CHECK(code_of([&] { finite_class_dimension_sum(g, nat); }) == Errc::UnsupportedMonoid);
}

TEST_CASE("structure constant table") {
  const FiniteGroup g = s2();
  const auto t = hecke_table(g, {sh({1, 0}), AffineAut::identity(2)});
  REQUIRE(t.classes.size() == 2);
  CHECK(t.classes[0].rep.is_identity());
  CHECK(format_hecke(t.entries[1][1]) == "1*b[shift(0,2)] + 2*b[shift(1,1)]");
  const std::string text = format_hecke_table(t);
  CHECK(text.find("b[e] * b[e] / |G| = 1*b[e]") != std::string::npos);
  const auto j = hecke_table_to_json(t);
  CHECK(j.at("classes").size() == 2);
  CHECK(j.at("entries").at(1).at(1).size() == 2);
}
