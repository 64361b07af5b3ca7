#include "skewforge/setting.hpp"

#include <algorithm>

#include "skewforge/error.hpp"

namespace skewforge {

Setting::Setting(std::string label, std::vector<Variable> variables, FiniteGroup group, ShiftMonoid monoid,
                 std::vector<RatFunc> gamma_gens, int separation_ball)
    : label_(std::move(label)),
      variables_(std::move(variables)),
      group_(std::move(group)),
      monoid_(std::move(monoid)),
      gamma_gens_(std::move(gamma_gens)) {
  const auto n = variables_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (variables_[i].id != i) throw Error(Errc::InvalidSetting, "variable ids must be 0..n-1 in order");
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[j].name == variables_[i].name) {
        throw Error(Errc::InvalidSetting, "duplicate variable name '" + variables_[i].name + "'");
      }
    }
  }
  if (group_.nvars() != n || monoid_.nvars() != n) {
    throw Error(Errc::SettingMismatch, "group or monoid acts on a different number of variables");
  }
  for (const auto& g : gamma_gens_) {
    if (!is_gamma_element(g)) {
      throw Error(Errc::InvalidSetting, "Gamma generator " + format(g) + " is not a G-invariant polynomial");
    }
  }
  if (!normalizes_check(group_, monoid_)) throw Error(Errc::InvalidSetting, "G does not normalize M");
  const auto report = is_separating(gamma_gens_, monoid_, group_, separation_ball);
  if (report.verdict == Tristate::False) {
    std::string msg = "M is not separating";
    if (report.witness) {
      msg += ": " + to_string(report.witness->first) + " and " + to_string(report.witness->second) +
             " agree on K";
    }
    throw Error(Errc::InvalidSetting, msg);
  }
  separating_ = report.verdict;
}

std::optional<VarId> Setting::lookup(std::string_view name) const {
  for (const auto& v : variables_) {
    if (v.name == name) return v.id;
  }
  return std::nullopt;
}

std::optional<VarId> Setting::at(int row, int col) const {
  for (const auto& v : variables_) {
    if (v.row == row && v.col == col) return v.id;
  }
  return std::nullopt;
}

const std::string& Setting::name(VarId v) const {
  if (v >= variables_.size()) throw Error(Errc::UnknownVariable, "variable id out of range");
  return variables_[v].name;
}

VarNamer Setting::namer() const {
  return [this](VarId v) { return v < variables_.size() ? variables_[v].name : default_var_name(v); };
}

VarLookup Setting::var_lookup() const {
  return [this](std::string_view name) { return lookup(name); };
}

RatFunc Setting::parse(std::string_view text) const { return parse_ratfunc(text, var_lookup()); }

std::string Setting::format(const RatFunc& f) const { return to_string(f, namer()); }

bool Setting::is_g_invariant(const RatFunc& f) const {
  const auto& gens = group_.generators();
  return std::all_of(gens.begin(), gens.end(), [&f](const AffineAut& g) { return apply_automorphism(g, f) == f; });
}

bool Setting::is_gamma_element(const RatFunc& f) const { return f.is_polynomial() && is_g_invariant(f); }

bool Setting::restriction_equal_on_K(const AffineAut& m1, const AffineAut& m2) const {
  return skewforge::restriction_equal_on_K(gamma_gens_, m1, m2);
}

}  // namespace skewforge
