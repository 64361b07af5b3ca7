#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "skewforge/autgroup.hpp"

namespace skewforge {

/// Simple balanced bimodule V(phi), labelled by its double coset G phi G.
using SimpleClass = DoubleCoset;

/// Element of the Grothendieck ring: multiplicities of simple classes.
using ClassSum = std::map<DoubleCoset, Integer>;

/// Rational combination of double-coset sums b_C.
using HeckeElement = std::map<DoubleCoset, Rational>;

SimpleClass simple_class(const FiniteGroup& group, const AffineAut& phi);

/// K-dimension of V(phi): |G : St(phi)|.
std::size_t class_dimension(const SimpleClass& c);

/// V(phi) (x)_K V(psi) as a sum of simples: each class c of G under
/// g ~ g' iff G phi g psi G = G phi g' psi G contributes
/// |St(phi g psi)| |c| / (|St(phi)| |St(psi)|) copies of V(phi g psi).
/// NonIntegerMultiplicity if a multiplicity is not a positive integer.
ClassSum tensor_decompose(const FiniteGroup& group, const AffineAut& phi, const AffineAut& psi);

/// b_phi b_psi = |G| / (|H_phi| |H_psi|) sum_g |H_{phi g psi}| b_{phi g psi},
/// extended bilinearly.
HeckeElement hecke_mul(const FiniteGroup& group, const HeckeElement& x, const HeckeElement& y);
/// The basis element b_phi.
HeckeElement hecke_basis(const FiniteGroup& group, const AffineAut& phi);
HeckeElement hecke_scaled(const HeckeElement& x, const Rational& c);

/// [V(phi)] -> b_phi / |G|, extended linearly.
HeckeElement grothendieck_to_hecke(const FiniteGroup& group, const ClassSum& x);

/// Sum over members of the family lying in G phi G of |St(phi)| / |G|. The
/// family, read as embeddings (right G-cosets), must be stable under left
/// multiplication by G; otherwise NotGInvariantFamily.
Rational multiplicity_from_family(const FiniteGroup& group, const std::vector<AffineAut>& family,
                                  const AffineAut& phi);

/// Sum of class dimensions over the G-classes of a finite monoid. Equals the
/// monoid order for separating M. UnsupportedMonoid if M does not close.
std::size_t finite_class_dimension_sum(const FiniteGroup& group, const ShiftMonoid& monoid);

std::string format_hecke(const HeckeElement& x);
nlohmann::json hecke_to_json(const HeckeElement& x);

/// Structure constants (1/|G|) b_i b_j over the given classes.
struct HeckeTable {
  std::vector<DoubleCoset> classes;
  std::vector<std::vector<HeckeElement>> entries;
};
HeckeTable hecke_table(const FiniteGroup& group, const std::vector<AffineAut>& reps);
std::string format_hecke_table(const HeckeTable& t);
nlohmann::json hecke_table_to_json(const HeckeTable& t);

}  // namespace skewforge
