#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skewforge/skew.hpp"

namespace skewforge {

/// One named identity check; passes when the residual is zero.
struct RelationCheck {
  std::string name;
  SkewElement residual;
  bool ok() const { return residual.is_zero(); }
};

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin realization of U(gl_n)

/// Variables l{i}{j}, 1 <= j <= i <= n, tagged (row i, col j). G = S_1 x ... x
/// S_n permuting within rows, M = Z^{n(n-1)/2} spanned by the unit shifts
/// delta^{ki} (k < n), Gamma = row-wise elementary symmetric polynomials.
SettingPtr build_gt(int n);

/// The rank n of a setting built by build_gt.
int gt_rank(const Setting& setting);

/// delta^{ki}: l_{ki} -> l_{ki} + 1.
AffineAut gt_delta(const Setting& setting, int k, int i);

/// a^+_{ki} = -prod_j (l_{k+1,j} - l_{ki}) / prod_{j != i} (l_{kj} - l_{ki})
/// a^-_{ki} =  prod_j (l_{k-1,j} - l_{ki}) / prod_{j != i} (l_{kj} - l_{ki})
RatFunc gt_coefficient(const Setting& setting, int k, int i, int sign);

/// E_k^+ = [delta^{k1} a^+_{k1}] and E_k^- = [delta^{k1}^-1 a^-_{k1}], with the
/// shift written on the left: the stored coefficient at delta^{ki} is
/// delta^{ki}(a^+_{ki}). IndexOutOfRange unless 1 <= k <= n-1.
InvariantElement gt_generator_image(const SettingPtr& setting, int k, int sign);

/// h_k support, [E_i^+, E_j^-] for i != j, the Cartan action and the Serre
/// relations, each as an exact residual.
std::vector<RelationCheck> gt_relation_checks(const SettingPtr& setting);
/// Runs gt_relation_checks; RelationFailed on the first nonzero residual.
std::vector<RelationCheck> gt_verify_relations(const SettingPtr& setting);

/// A vector of the module T_l: amplitudes on the lattice points m, indexed by
/// the non-top rows of the tableau in variable order.
struct GTState {
  std::vector<Rational> base;  // by VarId, top row included
  std::map<std::vector<long>, Rational> amplitudes;

  bool operator==(const GTState& o) const = default;
};

/// NonGenericTableau if two entries of one row, or of adjacent rows, differ
/// by an integer.
void gt_check_generic(const Setting& setting, const std::vector<Rational>& base);
GTState gt_basis_state(const Setting& setting, std::vector<Rational> base);

/// E_k^+- m = sum_i a^+-_{ki}(l + m) (m +- delta^{ki}).
GTState gt_module_act(const Setting& setting, const GTState& state, int k, int sign);

/// The skew ring acting on the same space: the basis vector m sits at the point
/// p = -(l + m), a function f acts on it by f(p) and a shift by v sends m to
/// m + v. This is a module for L*M (f s = s^-1(f) s holds pointwise), and
/// because every a^+-_{ki} is homogeneous of even degree it reproduces
/// gt_module_act on the generators.
GTState gt_symbolic_act(const SkewElement& x, const GTState& state);

// ---------------------------------------------------------------------------
// Generalized Weyl algebra of rank one

struct GwaPreset {
  SettingPtr setting;
  Poly a;
  Rational q;
  AffineAut sigma;  // t -> t - q
  InvariantElement X;
  InvariantElement Y;
};

/// L = Q(t), trivial G, M = <sigma>. X = sigma, Y = a sigma^-1, so that
/// X l = l^sigma X, l Y = Y l^sigma, YX = a, XY = a^sigma. The relations are
/// asserted at build time (RelationFailed). InvalidSetting for a = 0 or q = 0.
GwaPreset build_gwa(const Poly& a, const Rational& q = Rational(1));
/// Parses a in the variable t.
GwaPreset build_gwa(std::string_view a, const Rational& q = Rational(1));
std::vector<RelationCheck> gwa_relation_checks(const GwaPreset& p);

// ---------------------------------------------------------------------------
// Differential operators on a torus

enum class TorusFlavor { Plain, Symmetric, OrthogonalOdd, OrthogonalEven };
std::string_view flavor_name(TorusFlavor f);
/// UnsupportedFlavor for unknown names.
TorusFlavor parse_flavor(std::string_view name);

struct TorusPreset {
  SettingPtr setting;
  TorusFlavor flavor = TorusFlavor::Plain;
  /// x_i = sigma_i, and d_i = t_i sigma_i^-1 (plus 1 - sigma_i^-2 in the
  /// orthogonal flavors, which makes the assignment equivariant for t -> 2 - t).
  std::vector<SkewElement> x;
  std::vector<SkewElement> d;
  /// G-invariant generators: orbit sums and Gamma.
  std::vector<InvariantElement> invariant_gens;
};

/// Variables t_1..t_n, sigma_i: t_i -> t_i - 1, M = Z^n. G is trivial, S_n, or
/// S_n with the reflections t_i -> 2 - t_i (all of them, or an even number).
/// UnsupportedFlavor for orthogonal-even with n < 2.
TorusPreset build_torus(int n, TorusFlavor flavor);
std::vector<RelationCheck> torus_relation_checks(const TorusPreset& p);

// ---------------------------------------------------------------------------
// Other settings

/// x_1..x_n with S_n, the full shift lattice and elementary symmetric Gamma.
SettingPtr build_symmetric(int n);
/// L = Q(x, y), G = {e, swap}, M = {e, (x, y) -> (-x, -y)}.
SettingPtr build_finite();

struct TensorProduct {
  SettingPtr setting;
  SettingPtr left;
  SettingPtr right;

  SkewElement lift_left(const SkewElement& x) const;
  SkewElement lift_right(const SkewElement& x) const;
};

/// Variables side by side (suffixed _1 and _2 when names collide), G1 x G2,
/// M1 x M2, Gamma the union of the lifted generators.
TensorProduct tensor_product_rings(const SettingPtr& left, const SettingPtr& right);

/// Places a on the variables [offset, offset + a.size()) of nvars.
AffineAut lift_aut(const AffineAut& a, std::size_t offset, std::size_t nvars);
RatFunc lift_ratfunc(const RatFunc& f, std::size_t offset, std::size_t nvars);

struct GkBound {
  std::size_t gkdim_gamma = 0;
  std::size_t growth = 0;
  std::size_t sum = 0;
  bool operator==(const GkBound& o) const = default;
};

/// gkdim Gamma + gro(M) for a lattice M and polynomial Gamma: the variable
/// count plus the lattice rank. UnsupportedSetting otherwise.
GkBound gk_bound(const Setting& setting);

/// Builds a setting by name: gt(n), gwa(a[,q]), torus(n[,flavor]), sym(n),
/// finite, tensor(p1,p2). ParseError on malformed names.
SettingPtr build_preset(std::string_view spec);

/// g(x): coefficients moved by g, automorphisms conjugated.
SkewElement act_by(const AffineAut& g, const SkewElement& x);

}  // namespace skewforge
