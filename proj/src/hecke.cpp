#include "skewforge/hecke.hpp"

#include <algorithm>
#include <set>

#include "skewforge/error.hpp"

namespace skewforge {

SimpleClass simple_class(const FiniteGroup& group, const AffineAut& phi) {
  return canonical_double_coset(group, phi);
}

std::size_t class_dimension(const SimpleClass& c) { return c.orbit_size; }

ClassSum tensor_decompose(const FiniteGroup& group, const AffineAut& phi, const AffineAut& psi) {
  const std::size_t h_phi = embedding_stabilizer(group, phi).order();
  const std::size_t h_psi = embedding_stabilizer(group, psi).order();
  ClassSum out;
  for (const auto& cls : g_equivalence_classes(group, phi, psi)) {
    const AffineAut tau = compose(compose(phi, cls.front()), psi);
    const DoubleCoset dc = canonical_double_coset(group, tau);
    Rational m(Integer(dc.stab_order * cls.size()), Integer(h_phi * h_psi));
    m.canonicalize();
    if (m.get_den() != 1 || m <= 0) {
      throw Error(Errc::NonIntegerMultiplicity,
                  "multiplicity " + m.get_str() + " for the class of " + to_string(tau));
    }
    out[dc] += m.get_num();
  }
  return out;
}

HeckeElement hecke_basis(const FiniteGroup& group, const AffineAut& phi) {
  return {{canonical_double_coset(group, phi), Rational(1)}};
}

HeckeElement hecke_scaled(const HeckeElement& x, const Rational& c) {
  HeckeElement out;
  if (c == 0) return out;
  for (const auto& [k, v] : x) out.emplace(k, v * c);
  return out;
}

namespace {

void add_to(HeckeElement& acc, const DoubleCoset& k, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = acc.try_emplace(k, v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) acc.erase(it);
}

}  // namespace

HeckeElement hecke_mul(const FiniteGroup& group, const HeckeElement& x, const HeckeElement& y) {
  HeckeElement out;
  const Rational order(static_cast<long>(group.order()));
  for (const auto& [cx, ax] : x) {
    for (const auto& [cy, ay] : y) {
      const Rational scale = ax * ay * order / Rational(static_cast<long>(cx.stab_order * cy.stab_order));
      for (const auto& g : group.elements()) {
        const DoubleCoset dc = canonical_double_coset(group, compose(compose(cx.rep, g), cy.rep));
        add_to(out, dc, scale * Rational(static_cast<long>(dc.stab_order)));
      }
    }
  }
  return out;
}

HeckeElement grothendieck_to_hecke(const FiniteGroup& group, const ClassSum& x) {
  HeckeElement out;
  const Rational inv_order(1, static_cast<long>(group.order()));
  for (const auto& [c, m] : x) add_to(out, c, Rational(m) * inv_order);
  return out;
}

namespace {

// Canonical representative of the right coset a G.
AffineAut right_coset_rep(const FiniteGroup& group, const AffineAut& a) {
  AffineAut best = a;
  for (const auto& g : group.elements()) {
    AffineAut c = compose(a, g);
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

Rational multiplicity_from_family(const FiniteGroup& group, const std::vector<AffineAut>& family,
                                  const AffineAut& phi) {
  std::multiset<AffineAut> cosets;
  for (const auto& a : family) cosets.insert(right_coset_rep(group, a));
  for (const auto& h : group.generators()) {
    std::multiset<AffineAut> moved;
    for (const auto& a : family) moved.insert(right_coset_rep(group, compose(h, a)));
    if (moved != cosets) throw Error(Errc::NotGInvariantFamily, "family is not stable under " + to_string(h));
  }
  const std::size_t h_phi = embedding_stabilizer(group, phi).order();
  Rational n = 0;
  for (const auto& a : family) {
    if (double_coset_equal(group, a, phi)) n += make_rational(Integer(h_phi), Integer(group.order()));
  }
  return n;
}

std::size_t finite_class_dimension_sum(const FiniteGroup& group, const ShiftMonoid& monoid) {
  const auto en = monoid.enumerate(64);
  if (!en.complete) throw Error(Errc::UnsupportedMonoid, "monoid does not close within 64 factors");
  std::set<AffineAut> covered;
  std::size_t total = 0;
  for (const auto& m : en.elements) {
    if (covered.contains(m)) continue;
    for (const auto& o : stabilizer_and_orbit(group, m).orbit) covered.insert(o);
    total += class_dimension(canonical_double_coset(group, m));
  }
  return total;
}

std::string format_hecke(const HeckeElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : x) {
    if (!out.empty()) out += " + ";
    out += v.get_str() + "*b[" + to_string(c.rep) + "]";
  }
  return out;
}

nlohmann::json hecke_to_json(const HeckeElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, v] : x) out.push_back({{"rep", aut_to_json(c.rep)}, {"coeff", v.get_str()}});
  return out;
}

HeckeTable hecke_table(const FiniteGroup& group, const std::vector<AffineAut>& reps) {
  HeckeTable t;
  for (const auto& r : reps) {
    DoubleCoset dc = canonical_double_coset(group, r);
    if (std::find(t.classes.begin(), t.classes.end(), dc) == t.classes.end()) t.classes.push_back(std::move(dc));
  }
  std::sort(t.classes.begin(), t.classes.end());
  const Rational inv_order(1, static_cast<long>(group.order()));
  for (const auto& a : t.classes) {
    auto& row = t.entries.emplace_back();
    for (const auto& b : t.classes) {
      row.push_back(hecke_scaled(hecke_mul(group, {{a, Rational(1)}}, {{b, Rational(1)}}), inv_order));
    }
  }
  return t;
}

std::string format_hecke_table(const HeckeTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    for (std::size_t j = 0; j < t.classes.size(); ++j) {
      out += "b[" + to_string(t.classes[i].rep) + "] * b[" + to_string(t.classes[j].rep) + "] / |G| = " +
             format_hecke(t.entries[i][j]) + "\n";
    }
  }
  return out;
}

nlohmann::json hecke_table_to_json(const HeckeTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes) {
    classes.push_back({{"rep", aut_to_json(c.rep)}, {"dimension", c.orbit_size}, {"stabilizer", c.stab_order}});
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& row : t.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(hecke_to_json(e));
    entries.push_back(std::move(r));
  }
  return {{"classes", classes}, {"entries", entries}};
}

}  // namespace skewforge
