#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "skewforge/ratfunc.hpp"

namespace skewforge {

/// Affine automorphism of the rational function field:
///   x_v  |->  scale[v] * x_{perm[v]} + shift[v].
/// The triple is the normal form, so equality is entrywise.
class AffineAut {
 public:
  AffineAut() = default;
  /// Validates that perm is a bijection and every scale is nonzero.
  AffineAut(std::vector<VarId> perm, std::vector<Rational> scale, std::vector<Rational> shift);

  static AffineAut identity(std::size_t nvars);
  static AffineAut shift(std::vector<Rational> vector);
  static AffineAut permutation(std::vector<VarId> perm);

  std::size_t size() const noexcept { return perm_.size(); }
  const std::vector<VarId>& perm() const noexcept { return perm_; }
  const std::vector<Rational>& scale() const noexcept { return scale_; }
  const std::vector<Rational>& shift_vector() const noexcept { return shift_; }

  bool is_identity() const;
  /// perm = id and scale = 1.
  bool is_pure_shift() const;

  /// Images of the variables as polynomials.
  std::vector<Poly> images() const;

  bool operator==(const AffineAut& o) const = default;
  /// Lexicographic on (perm, scale, shift).
  std::strong_ordering operator<=>(const AffineAut& o) const;

  std::size_t hash() const noexcept;

 private:
  std::vector<VarId> perm_;
  std::vector<Rational> scale_;
  std::vector<Rational> shift_;
};

struct AffineAutHash {
  std::size_t operator()(const AffineAut& a) const noexcept { return a.hash(); }
};

/// The ring homomorphism a applied to f. UnknownVariable if f mentions a
/// variable outside a's variable set.
RatFunc apply_automorphism(const AffineAut& a, const RatFunc& f);
Poly apply_automorphism(const AffineAut& a, const Poly& f);

/// a o b, so that apply(compose(a, b), f) = apply(a, apply(b, f)).
/// SettingMismatch when the variable counts differ.
AffineAut compose(const AffineAut& a, const AffineAut& b);
AffineAut invert(const AffineAut& a);
/// g o phi o g^-1.
AffineAut conjugate(const AffineAut& g, const AffineAut& phi);

std::string to_string(const AffineAut& a);
nlohmann::json aut_to_json(const AffineAut& a);
AffineAut aut_from_json(const nlohmann::json& j);

/// Finite group of affine automorphisms, stored as an explicit element list
/// (identity first, then breadth-first order over the generators).
class FiniteGroup {
 public:
  FiniteGroup() = default;
  const std::vector<AffineAut>& elements() const noexcept { return elements_; }
  const std::vector<AffineAut>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  bool contains(const AffineAut& a) const { return index_.contains(a); }
  /// Position in elements(), if present.
  std::optional<std::size_t> index_of(const AffineAut& a) const;

  static FiniteGroup trivial(std::size_t nvars);
  /// Builds a group from a list already known to be closed. Without explicit
  /// generators every nonidentity element serves as one.
  static FiniteGroup from_closed_elements(std::vector<AffineAut> elements, std::size_t nvars,
                                          std::optional<std::vector<AffineAut>> generators = std::nullopt);

  friend FiniteGroup group_closure(std::span<const AffineAut> gens, std::size_t nvars, std::size_t cap);

 private:
  void reindex();

  std::vector<AffineAut> elements_;
  std::vector<AffineAut> generators_;
  std::unordered_map<AffineAut, std::size_t, AffineAutHash> index_;
  std::size_t nvars_ = 0;
};

/// Subgroup generated by gens. ClosureCapExceeded past `cap` elements.
FiniteGroup group_closure(std::span<const AffineAut> gens, std::size_t nvars, std::size_t cap = 100000);
/// Direct product of groups acting on disjoint variable blocks [a | b].
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct StabilizerOrbit {
  FiniteGroup stabilizer;
  std::vector<AffineAut> orbit;
  /// coset_reps[i] conjugates phi to orbit[i].
  std::vector<AffineAut> coset_reps;
};

/// H = {h : h phi h^-1 = phi} and the conjugation orbit of phi.
StabilizerOrbit stabilizer_and_orbit(const FiniteGroup& group, const AffineAut& phi);

/// Stabilizer of the embedding phi|_K: {h in G : phi^-1 h phi in G}. Agrees
/// with the conjugation stabilizer on pure shifts normalized by G.
FiniteGroup embedding_stabilizer(const FiniteGroup& group, const AffineAut& phi);

bool double_coset_equal(const FiniteGroup& group, const AffineAut& phi, const AffineAut& psi);

/// G phi G with its order-minimal representative.
struct DoubleCoset {
  AffineAut rep;
  std::size_t stab_order = 0;
  std::size_t orbit_size = 0;
  /// Whether some element of the double coset is a pure shift.
  bool has_pure_shift = false;

  bool operator==(const DoubleCoset& o) const { return rep == o.rep; }
  std::strong_ordering operator<=>(const DoubleCoset& o) const { return rep <=> o.rep; }
};

DoubleCoset canonical_double_coset(const FiniteGroup& group, const AffineAut& phi);

/// Partition of G by the double coset of phi o g o psi, classes in order of
/// first appearance.
std::vector<std::vector<AffineAut>> g_equivalence_classes(const FiniteGroup& group, const AffineAut& phi,
                                                          const AffineAut& psi);

/// The shift monoid M. Either a lattice of pure shifts given by a basis, or
/// the monoid generated by an explicit list of automorphisms.
class ShiftMonoid {
 public:
  enum class Kind { Lattice, Generated };

  ShiftMonoid() = default;
  /// basis[i] is a shift vector over nvars variables.
  static ShiftMonoid lattice(std::vector<std::vector<Rational>> basis, std::size_t nvars);
  static ShiftMonoid generated(std::vector<AffineAut> generators, std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  bool is_lattice() const noexcept { return kind_ == Kind::Lattice; }
  std::size_t nvars() const noexcept { return nvars_; }
  /// Lattice basis (as pure shifts) or monoid generators.
  const std::vector<AffineAut>& generators() const noexcept { return generators_; }
  std::size_t rank() const noexcept { return generators_.size(); }

  /// Integer coordinates in the lattice basis, if a is a lattice element.
  std::optional<std::vector<Integer>> coordinates(const AffineAut& a) const;
  /// Lattice element with the given coordinates.
  AffineAut element(std::span<const Integer> coords) const;

  /// Lattice: exact. Generated: searches words up to `word_bound` factors.
  bool contains(const AffineAut& a, std::size_t word_bound = 6) const;

  /// Elements reachable by words of length <= bound (identity included);
  /// `complete` reports whether the monoid closed before the bound.
  struct Enumeration {
    std::vector<AffineAut> elements;
    bool complete = false;
  };
  Enumeration enumerate(std::size_t bound) const;

 private:
  Kind kind_ = Kind::Lattice;
  std::size_t nvars_ = 0;
  std::vector<AffineAut> generators_;
};

bool normalizes_check(const FiniteGroup& group, const ShiftMonoid& monoid);

/// m1 and m2 agree on K, probed on generators of Gamma.
bool restriction_equal_on_K(std::span<const RatFunc> gamma_gens, const AffineAut& m1, const AffineAut& m2);

enum class Tristate { False, True, Unknown };

struct SeparationReport {
  Tristate verdict = Tristate::Unknown;
  std::optional<std::pair<AffineAut, AffineAut>> witness;
};

/// Whether M is separating for K = L^G, probed through the generators of
/// Gamma. Lattice M: structural argument plus a radius-`ball` search for two
/// elements agreeing on K. Generated M: exhaustive when M closes within
/// `ball` word length, otherwise Unknown unless a witness turns up.
SeparationReport is_separating(std::span<const RatFunc> gamma_gens, const ShiftMonoid& monoid,
                               const FiniteGroup& group, int ball);

}  // namespace skewforge
