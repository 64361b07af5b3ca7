#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace skewforge {

using Integer = mpz_class;
using Rational = mpq_class;
using VarId = std::uint32_t;

/// Builds a canonical rational num/den; throws ZeroDenominator on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Sparse power product. Exponents are kept sorted by variable id and no
/// stored exponent is zero.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(VarId v, std::uint32_t exponent = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const noexcept { return entries_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// Componentwise minimum (monomial gcd).
  Monomial gcd(const Monomial& other) const;
  /// Removes the given variable.
  Monomial without(VarId v) const;

  bool operator==(const Monomial& other) const = default;
  /// Graded lexicographic order; lower variable ids dominate in the tie-break.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const noexcept;

 private:
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// strictly decreasing graded-lex order with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(VarId v);
  static Poly monomial(Monomial m, Rational c = 1);
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);
  /// Takes terms already in canonical order with nonzero coefficients.
  static Poly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value (coefficient of the unit monomial).
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;
  /// Sorted list of variables that occur.
  std::vector<VarId> variables() const;

  /// Coefficients with respect to v: result[k] is the coefficient of v^k.
  std::vector<Poly> coefficients_in(VarId v) const;
  /// Coefficient of v^k.
  Poly coefficient_in(VarId v, std::uint32_t k) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(std::uint32_t e) const;
  /// Multiplies by a monomial.
  Poly shifted(const Monomial& m) const;

  bool operator==(const Poly& o) const;

  /// Evaluation at a dense point indexed by variable id; UnknownVariable if
  /// a variable lies outside the point.
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces x_v by images[v].
  Poly substitute(std::span<const Poly> images) const;

  std::size_t hash() const noexcept;

 private:
  std::vector<Term> terms_;
};

/// Rational c with p / c a primitive integer polynomial whose leading
/// coefficient is positive. Zero for p = 0.
Rational content(const Poly& p);
/// p / content(p).
Poly primitive_part(const Poly& p);
/// a / b when b divides a exactly.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// Primitive integer gcd with positive leading coefficient; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

using VarNamer = std::function<std::string(VarId)>;
std::string default_var_name(VarId v);
/// Deterministic text form in decreasing graded-lex order.
std::string to_string(const Poly& p, const VarNamer& name = default_var_name);

}  // namespace skewforge
