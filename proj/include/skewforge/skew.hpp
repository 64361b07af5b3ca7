#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "skewforge/setting.hpp"

namespace skewforge {

/// Element of L*M: a finite sum of left coefficients times automorphisms,
/// x = sum x_m m. Terms are kept in the canonical automorphism order and zero
/// coefficients are never stored.
class SkewElement {
 public:
  using Terms = std::map<AffineAut, RatFunc>;

  explicit SkewElement(SettingPtr setting) : setting_(std::move(setting)) {}
  static SkewElement term(SettingPtr setting, const RatFunc& coeff, const AffineAut& aut);
  /// coeff * e
  static SkewElement scalar(SettingPtr setting, const RatFunc& coeff);

  const SettingPtr& setting() const noexcept { return setting_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient at m (zero when absent).
  RatFunc coefficient(const AffineAut& m) const;
  /// With the automorphism written on the left, m * c: the coefficient at m
  /// of x is m(c), so c = m^-1(x_m).
  RatFunc right_coefficient(const AffineAut& m) const;

  void add_term(const AffineAut& m, const RatFunc& c);

  SkewElement operator-() const;
  SkewElement operator+(const SkewElement& o) const;
  SkewElement operator-(const SkewElement& o) const;
  SkewElement& operator+=(const SkewElement& o);
  /// Left scalar multiplication f * x.
  SkewElement scaled(const RatFunc& f) const;

  bool operator==(const SkewElement& o) const;

 private:
  void check_same(const SkewElement& o) const;

  SettingPtr setting_;
  Terms terms_;
};

/// (r1 m1)(r2 m2) = r1 m1(r2) (m1 m2), extended bilinearly.
SkewElement skew_mul(const SkewElement& x, const SkewElement& y);
SkewElement operator*(const SkewElement& x, const SkewElement& y);
/// x y - y x
SkewElement commutator(const SkewElement& x, const SkewElement& y);
/// Inverse of a single nonzero term a m: m^-1(a^-1) m^-1. NotInvertible otherwise.
SkewElement skew_inverse(const SkewElement& x);
SkewElement skew_pow(const SkewElement& x, int e);

std::vector<AffineAut> support(const SkewElement& x);
/// x_{g m g^-1} = g(x_m) for every g in G and m in supp x.
bool is_invariant(const SkewElement& x);

/// Element of K = (L*M)^G. The constructor checks invariance.
class InvariantElement {
 public:
  /// NotInvariant if x fails is_invariant.
  explicit InvariantElement(SkewElement x);
  static InvariantElement zero(SettingPtr setting) { return InvariantElement(SkewElement(std::move(setting))); }

  const SkewElement& element() const noexcept { return x_; }
  const SettingPtr& setting() const noexcept { return x_.setting(); }
  bool is_zero() const noexcept { return x_.is_zero(); }

  InvariantElement operator+(const InvariantElement& o) const { return InvariantElement(x_ + o.x_); }
  InvariantElement operator-(const InvariantElement& o) const { return InvariantElement(x_ - o.x_); }
  InvariantElement operator-() const { return InvariantElement(-x_); }
  bool operator==(const InvariantElement& o) const { return x_ == o.x_; }

 private:
  SkewElement x_;
};

InvariantElement operator*(const InvariantElement& x, const InvariantElement& y);

/// [a phi] = sum over g in G/H_phi of g(a) phi^g. NotStabilizerInvariant if
/// some h in H_phi moves a.
InvariantElement make_invariant(const SettingPtr& setting, const RatFunc& a, const AffineAut& phi);

/// x * (gamma e) * y. NotGammaElement unless gamma is a G-invariant polynomial.
InvariantElement invariant_mul(const InvariantElement& x, const RatFunc& gamma, const InvariantElement& y);

/// O_phi O_psi = {a b : a in O_phi, b in O_psi} for the conjugation orbits.
std::set<AffineAut> orbit_product(const FiniteGroup& group, const AffineAut& phi, const AffineAut& psi);

/// Terms of x whose automorphism lies in S.
SkewElement restrict_support(const SkewElement& x, const std::set<AffineAut>& keep);

struct Projection {
  InvariantElement result;
  RatFunc f;
};

/// Applies u -> prod over s in supp x \ S of (f u - u s^-1(f)). The result has
/// support inside S. Without f, searches Gamma generators and small integer
/// combinations for one that keeps every component of S alive (at most 100
/// candidates, then ProjectionSearchFailed).
Projection project_component(const InvariantElement& x, const std::set<AffineAut>& keep,
                             const std::optional<RatFunc>& f = std::nullopt);

/// One double coset per G-orbit of supp x, sorted. ZeroElement for x = 0.
std::vector<DoubleCoset> decompose_bimodule_classes(const InvariantElement& x);

/// supp x in {e} with coefficient fixed by G and by every generator of M.
bool center_membership(const InvariantElement& x);

/// A Gamma element that does not commute with x, when supp x is not inside {e}.
std::optional<RatFunc> noncommute_witness(const InvariantElement& x);

/// Whether the union of the supports generates M as a semigroup.
/// UnsupportedMonoid for infinite non-lattice monoids.
bool galois_generator_check(const Setting& setting, const std::vector<InvariantElement>& gens);

struct IdealClosure {
  bool whole_monoid = false;
  /// Generators of the G-invariant monoid ideal when not the whole monoid.
  std::vector<AffineAut> generators;
};

/// The G-invariant two-sided ideal of M generated by S. EmptySupport for S = {}.
IdealClosure ideal_support_closure(const Setting& setting, const std::vector<AffineAut>& s);

/// Canonical text: "(coeff)*aut" terms joined by " + ", "0" for zero. The
/// element parser reads it back.
std::string format_element(const SkewElement& x);
nlohmann::json element_to_json(const SkewElement& x);
/// SettingMismatch if the label differs.
SkewElement element_from_json(const SettingPtr& setting, const nlohmann::json& j);

}  // namespace skewforge
