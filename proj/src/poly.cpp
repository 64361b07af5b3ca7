#include "skewforge/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skewforge/error.hpp"

namespace skewforge {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

Rational rational_pow(const Rational& base, std::uint32_t e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool mono_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += e;
    } else {
      entries_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  return Monomial(std::vector<Entry>{{v, exponent}});
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() || j != other.entries_.end()) {
    if (j == other.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (other.degree_ > degree_) return std::nullopt;
  Monomial out;
  auto i = entries_.begin();
  for (const auto& [v, e] : other.entries_) {
    while (i != entries_.end() && i->first < v) out.entries_.push_back(*i++);
    if (i == entries_.end() || i->first != v || i->second < e) return std::nullopt;
    if (i->second > e) out.entries_.emplace_back(v, i->second - e);
    ++i;
  }
  while (i != entries_.end()) out.entries_.push_back(*i++);
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  auto j = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (j != other.entries_.end() && j->first < v) ++j;
    if (j == other.entries_.end()) break;
    if (j->first == v) {
      auto m = std::min(e, j->second);
      out.entries_.emplace_back(v, m);
      out.degree_ += m;
    }
  }
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& entry : entries_) {
    if (entry.first == v) continue;
    out.entries_.push_back(entry);
    out.degree_ += entry.second;
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() && j != other.entries_.end()) {
    if (i->first != j->first) {
      // The side holding the smaller variable id has a positive exponent
      // where the other has zero.
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != entries_.end()) return std::strong_ordering::greater;
  if (j != other.entries_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : entries_) {
    h ^= (static_cast<std::size_t>(v) * 0x100000001b3ULL + e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::variable(VarId v) { return monomial(Monomial::variable(v)); }

Poly Poly::monomial(Monomial m, Rational c) {
  Poly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), mono_greater);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono.entries()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::vector<Poly> Poly::coefficients_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coeff});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::coefficient_in(VarId v, std::uint32_t k) const {
  std::vector<Term> bucket;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == k) bucket.push_back({t.mono.without(v), t.coeff});
  }
  return from_terms(std::move(bucket));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

Poly merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->mono > i->mono) {
      out.push_back({j->mono, subtract ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge(terms_, o.terms_, false);
}

Poly Poly::operator-(const Poly& o) const {
  if (o.is_zero()) return *this;
  return merge(terms_, o.terms_, true);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_constant()) return *this * o.terms_.front().coeff;
  if (is_constant()) return o * terms_.front().coeff;
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::move(out));
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono * m;
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  }
  return true;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  std::map<std::pair<VarId, std::uint32_t>, Rational> powers;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (const auto& [v, e] : t.mono.entries()) {
      if (v >= point.size()) {
        throw Error(Errc::UnknownVariable, "variable " + std::to_string(v) + " has no value");
      }
      auto [it, fresh] = powers.try_emplace({v, e});
      if (fresh) it->second = rational_pow(point[v], e);
      value *= it->second;
    }
    sum += value;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  std::map<std::pair<VarId, std::uint32_t>, Poly> powers;
  std::vector<Term> collected;
  for (const auto& t : terms_) {
    Poly value(t.coeff);
    for (const auto& [v, e] : t.mono.entries()) {
      if (v >= images.size()) {
        throw Error(Errc::UnknownVariable, "variable " + std::to_string(v) + " outside the setting");
      }
      auto [it, fresh] = powers.try_emplace({v, e});
      if (fresh) it->second = images[v].pow(e);
      value = value * it->second;
    }
    for (auto& term : value.terms_) collected.push_back(std::move(term));
  }
  return from_terms(std::move(collected));
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(t.coeff.get_num_mpz_t()) * 31 + mpz_get_ui(t.coeff.get_den_mpz_t());
  }
  return h;
}

// ------------------------------------------------------------ gcd & co

Rational content(const Poly& p) {
  if (p.is_zero()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (p.leading().coeff < 0) c = -c;
  return c;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (c == 1) return p;
  return p * Rational(1 / c);
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a * Rational(1 / b.leading().coeff);
  for (VarId v : b.variables()) {
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;
  }
  std::vector<Term> quotient;
  Poly r = a;
  const Term& lead = b.leading();
  while (!r.is_zero()) {
    auto m = r.leading().mono.divide(lead.mono);
    if (!m) return std::nullopt;
    Rational c = r.leading().coeff / lead.coeff;
    r = r - b.shifted(*m) * c;
    quotient.push_back({std::move(*m), std::move(c)});
  }
  return Poly::from_terms(std::move(quotient));
}

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: inexact division");
  return *std::move(q);
}

Monomial monomial_content(const Poly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) m = m.gcd(t.mono);
  return m;
}

Poly divide_monomial(const Poly& p, const Monomial& m) {
  if (m.is_one()) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({*t.mono.divide(m), t.coeff});
  return Poly::from_terms(std::move(out));
}

Poly univariate_gcd(Poly a, Poly b, VarId v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    const auto db = b.degree_in(v);
    const Rational lb = b.leading().coeff;
    Poly r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
      const auto d = r.degree_in(v) - db;
      Rational c = r.leading().coeff / lb;
      r = r - b.shifted(Monomial::variable(v, d)) * c;
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

/// gcd of all coefficients of p viewed as a polynomial in v.
Poly content_in(const Poly& p, VarId v) {
  Poly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly pseudo_remainder(Poly a, const Poly& b, VarId v) {
  const auto db = b.degree_in(v);
  const Poly lb = b.coefficient_in(v, db);
  while (!a.is_zero()) {
    const auto da = a.degree_in(v);
    if (da < db) break;
    Poly la = a.coefficient_in(v, da);
    a = a * lb - (b * la).shifted(Monomial::variable(v, da - db));
  }
  return a;
}

Poly recursive_gcd(Poly a, Poly b, const std::vector<VarId>& vars) {
  VarId main = vars.front();
  std::uint32_t best = ~0U;
  for (VarId v : vars) {
    auto d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  Poly ca = content_in(a, main);
  Poly cb = content_in(b, main);
  Poly c = gcd(ca, cb);
  a = exact_quotient(a, ca);
  b = exact_quotient(b, cb);
  if (a.degree_in(main) < b.degree_in(main)) std::swap(a, b);
  Poly g(1);
  while (true) {
    if (b.degree_in(main) == 0) break;
    Poly r = pseudo_remainder(a, b, main);
    if (r.is_zero()) {
      g = b;
      break;
    }
    a = std::move(b);
    b = exact_quotient(r, content_in(r, main));
  }
  return primitive_part(c * g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);

  const Monomial mg = monomial_content(a).gcd(monomial_content(b));
  Poly x = primitive_part(divide_monomial(a, monomial_content(a)));
  Poly y = primitive_part(divide_monomial(b, monomial_content(b)));
  const Poly mono_part = Poly::monomial(mg);

  if (x == y) return x * mono_part;
  if (x.is_constant() || y.is_constant()) return mono_part;

  const auto vx = x.variables();
  const auto vy = y.variables();
  // A variable present on one side only: the gcd divides every coefficient
  // with respect to that variable.
  for (int side = 0; side < 2; ++side) {
    const auto& own = side == 0 ? vx : vy;
    const auto& other = side == 0 ? vy : vx;
    for (VarId v : own) {
      if (std::binary_search(other.begin(), other.end(), v)) continue;
      const Poly& p = side == 0 ? x : y;
      Poly g = side == 0 ? y : x;
      for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = gcd(c, g);
        if (g.is_constant()) break;
      }
      return primitive_part(g) * mono_part;
    }
  }

  if (x.size() >= y.size()) {
    if (divide_exact(x, y)) return y * mono_part;
  } else if (divide_exact(y, x)) {
    return x * mono_part;
  }

  if (vx.size() == 1) return univariate_gcd(x, y, vx.front()) * mono_part;
  return recursive_gcd(std::move(x), std::move(y), vx) * mono_part;
}

// ------------------------------------------------------------------- text

std::string default_var_name(VarId v) { return "x" + std::to_string(v); }

std::string to_string(const Poly& p, const VarNamer& name) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      out << c.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : t.mono.entries()) {
      if (wrote) out << "*";
      out << name(v);
      if (e != 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace skewforge
