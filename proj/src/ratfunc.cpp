#include "skewforge/ratfunc.hpp"

#include <cctype>

#include "skewforge/error.hpp"

namespace skewforge {

namespace {

Poly quotient(const Poly& a, const Poly& b) {
  if (b.is_constant()) return a * Rational(1 / b.leading().coeff);
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("ratfunc: inexact division by a gcd");
  return *std::move(q);
}

}  // namespace

void RatFunc::normalize_constants() {
  if (den_.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Rational cn = content(num_);
  const Rational cd = content(den_);
  if (cn == 1 && cd == 1) return;
  const Rational ratio = cn / cd;
  num_ = num_ * Rational(ratio.get_num() / cn);
  den_ = den_ * Rational(ratio.get_den() / cd);
}

RatFunc RatFunc::make(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) return RatFunc(num, den, true);
  Poly g = gcd(num, den);
  if (g.is_constant()) return RatFunc(num, den, true);
  return RatFunc(quotient(num, g), quotient(den, g), true);
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("RatFunc::constant_value on a non-constant");
  return num_.constant_term() / den_.constant_term();
}

Poly RatFunc::as_poly() const {
  if (!is_polynomial()) throw std::logic_error("RatFunc::as_poly on a proper fraction");
  return num_ * Rational(1 / den_.constant_term());
}

std::vector<VarId> RatFunc::variables() const {
  auto a = num_.variables();
  auto b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (is_polynomial() && o.is_polynomial()) return RatFunc(as_poly() + o.as_poly());
  if (den_ == o.den_) return make(num_ + o.num_, den_);
  const Poly g = gcd(den_, o.den_);
  const Poly b1 = quotient(den_, g);
  const Poly d1 = quotient(o.den_, g);
  Poly num = num_ * d1 + o.num_ * b1;
  if (num.is_zero()) return RatFunc();
  const Poly h = gcd(num, g);
  return RatFunc(quotient(num, h), b1 * quotient(o.den_, h), true);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (is_polynomial() && o.is_polynomial()) return RatFunc(as_poly() * o.as_poly());
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  return RatFunc(quotient(num_, g1) * quotient(o.num_, g2), quotient(den_, g2) * quotient(o.den_, g1),
                 true);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_, true);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational function division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<std::uint32_t>(e)), den_.pow(static_cast<std::uint32_t>(e)), true);
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw Error(Errc::PoleAtPoint, "denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

RatFunc RatFunc::substitute(std::span<const Poly> images) const {
  return make(num_.substitute(images), den_.substitute(images));
}

RatFunc RatFunc::substitute_invertible(std::span<const Poly> images) const {
  if (is_constant()) return *this;
  return RatFunc(num_.substitute(images), den_.substitute(images), true);
}

std::string to_string(const RatFunc& f, const VarNamer& name) {
  if (f.den() == Poly(1)) return to_string(f.num(), name);
  std::string out = "(" + to_string(f.num(), name) + ")/";
  if (f.den().is_constant()) return out + to_string(f.den(), name);
  return out + "(" + to_string(f.den(), name) + ")";
}

// ------------------------------------------------------------------ parser

namespace {

class RatFuncParser {
 public:
  RatFuncParser(std::string_view text, const VarLookup& lookup) : text_(text), lookup_(lookup) {}

  RatFunc parse() {
    RatFunc f = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) throw SyntaxError(at, "division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return base.pow(negative ? -e : e);
  }

  RatFunc primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc f = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      auto v = lookup_(name);
      if (!v) throw SyntaxError(start, "unknown variable '" + std::string(name) + "'");
      return RatFunc::variable(*v);
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const VarLookup& lookup_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const VarLookup& lookup) {
  return RatFuncParser(text, lookup).parse();
}

// -------------------------------------------------------------------- json

nlohmann::json poly_to_json(const Poly& p, std::size_t nvars) {
  auto out = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(nvars, 0);
    for (const auto& [v, e] : t.mono.entries()) {
      if (v >= nvars) throw Error(Errc::UnknownVariable, "variable outside the serialization width");
      exps[v] = e;
    }
    out.push_back(nlohmann::json::array({exps, t.coeff.get_str()}));
  }
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& entry : j) {
    const auto exps = entry.at(0).get<std::vector<std::uint32_t>>();
    std::vector<Monomial::Entry> mono;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] != 0) mono.emplace_back(static_cast<VarId>(v), exps[v]);
    }
    terms.push_back({Monomial(std::move(mono)), parse_rational(entry.at(1).get<std::string>())});
  }
  return Poly::from_terms(std::move(terms));
}

nlohmann::json ratfunc_to_json(const RatFunc& f, std::size_t nvars) {
  return {{"num", poly_to_json(f.num(), nvars)}, {"den", poly_to_json(f.den(), nvars)}};
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return RatFunc::make(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace skewforge
