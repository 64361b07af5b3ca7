#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "skewforge/poly.hpp"

namespace skewforge {

/// Element of the rational function field. Canonical form: numerator and
/// denominator are coprime integer polynomials, the joint integer content is
/// one and the denominator's graded-lex leading coefficient is positive.
/// Structural equality therefore decides equality of values.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) { normalize_constants(); }  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                              // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) { normalize_constants(); }   // NOLINT

  /// Canonical representative of num / den; throws ZeroDenominator.
  static RatFunc make(const Poly& num, const Poly& den);
  static RatFunc variable(VarId v) { return RatFunc(Poly::variable(v)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Value when is_constant().
  Rational constant_value() const;
  /// num/den as a polynomial with rational coefficients when is_polynomial().
  Poly as_poly() const;
  std::vector<VarId> variables() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  /// Throws DivisionByZero.
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Exact value; PoleAtPoint if the denominator vanishes.
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitution x_v -> images[v] followed by full normalization.
  RatFunc substitute(std::span<const Poly> images) const;
  /// Substitution by an invertible map: coprimality is preserved, so only the
  /// constant normalization is redone.
  RatFunc substitute_invertible(std::span<const Poly> images) const;

  std::size_t hash() const noexcept { return num_.hash() * 1000003U ^ den_.hash(); }

 private:
  RatFunc(Poly num, Poly den, bool /*coprime*/) : num_(std::move(num)), den_(std::move(den)) {
    normalize_constants();
  }
  void normalize_constants();

  Poly num_;
  Poly den_;
};

std::string to_string(const RatFunc& f, const VarNamer& name = default_var_name);

/// Resolves identifiers while parsing; returns nullopt for unknown names.
using VarLookup = std::function<std::optional<VarId>(std::string_view)>;

/// Parses the text form: rationals, variables, + - * / ^ and parentheses.
RatFunc parse_ratfunc(std::string_view text, const VarLookup& lookup);

/// [[exponent-vector, "num/den"], ...] over nvars variables.
nlohmann::json poly_to_json(const Poly& p, std::size_t nvars);
Poly poly_from_json(const nlohmann::json& j);
/// {"num": poly-json, "den": poly-json}
nlohmann::json ratfunc_to_json(const RatFunc& f, std::size_t nvars);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace skewforge
