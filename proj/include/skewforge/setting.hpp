#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewforge/autgroup.hpp"

namespace skewforge {

/// A variable of L. row/col are tags for triangular layouts (GT tableaux);
/// zero when unused.
struct Variable {
  VarId id = 0;
  std::string name;
  int row = 0;
  int col = 0;
};

/// The ambient data: L = Q(variables), the finite group G, the monoid M and
/// generators of Gamma. Construction validates G-invariance of Gamma, that G
/// normalizes M, and that M is not provably non-separating.
class Setting {
 public:
  Setting(std::string label, std::vector<Variable> variables, FiniteGroup group, ShiftMonoid monoid,
          std::vector<RatFunc> gamma_gens, int separation_ball = 2);

  const std::string& label() const noexcept { return label_; }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const FiniteGroup& group() const noexcept { return group_; }
  const ShiftMonoid& monoid() const noexcept { return monoid_; }
  const std::vector<RatFunc>& gamma_gens() const noexcept { return gamma_gens_; }
  Tristate separating() const noexcept { return separating_; }

  std::optional<VarId> lookup(std::string_view name) const;
  /// Variable carrying the (row, col) tag.
  std::optional<VarId> at(int row, int col) const;
  const std::string& name(VarId v) const;
  VarNamer namer() const;
  VarLookup var_lookup() const;

  RatFunc parse(std::string_view text) const;
  std::string format(const RatFunc& f) const;

  /// Fixed by every element of G.
  bool is_g_invariant(const RatFunc& f) const;
  /// G-invariant with a constant denominator.
  bool is_gamma_element(const RatFunc& f) const;
  bool restriction_equal_on_K(const AffineAut& m1, const AffineAut& m2) const;

 private:
  std::string label_;
  std::vector<Variable> variables_;
  FiniteGroup group_;
  ShiftMonoid monoid_;
  std::vector<RatFunc> gamma_gens_;
  Tristate separating_ = Tristate::Unknown;
};

using SettingPtr = std::shared_ptr<const Setting>;

}  // namespace skewforge
