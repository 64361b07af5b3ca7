#include "skewforge/parser.hpp"

#include <cctype>

#include "skewforge/error.hpp"
#include "skewforge/presets.hpp"

namespace skewforge {

namespace {

class ElementParser {
 public:
  ElementParser(SettingPtr setting, std::string_view text) : setting_(std::move(setting)), text_(text) {}

  SkewElement parse_all() {
    SkewElement x = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

  AffineAut parse_aut_only() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier();
    AffineAut a = automorphism(name, start);
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw SyntaxError(at, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  SkewElement expr() {
    SkewElement x = term();
    while (true) {
      if (accept('+')) {
        x += term();
      } else if (accept('-')) {
        x += -term();
      } else {
        return x;
      }
    }
  }

  SkewElement term() {
    SkewElement x = factor();
    while (true) {
      if (accept('*')) {
        x = skew_mul(x, factor());
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        SkewElement d = factor();
        try {
          x = skew_mul(x, skew_inverse(d));
        } catch (const Error& e) {
          fail_at(at, std::string("cannot divide: ") + e.what());
        }
      } else {
        return x;
      }
    }
  }

  SkewElement factor() {
    if (accept('-')) return -factor();
    return power();
  }

  SkewElement power() {
    SkewElement x = primary();
    if (!accept('^')) return x;
    const bool neg = accept('-');
    skip_ws();
    const std::size_t at = pos_;
    const Integer e = integer();
    if (!e.fits_sint_p() || abs(e) > 10000) fail_at(at, "exponent out of range");
    const int k = static_cast<int>(e.get_si());
    try {
      return skew_pow(x, neg ? -k : k);
    } catch (const Error& err) {
      fail_at(at, std::string("cannot take a negative power: ") + err.what());
    }
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // Signed rational literal for automorphism arguments.
  Rational rational() {
    const bool neg = accept('-');
    Integer num = integer();
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) fail_at(at, "zero denominator");
    }
    Rational q = make_rational(num, den);
    return neg ? Rational(-q) : q;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  SkewElement primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SkewElement x = expr();
      expect(')');
      return x;
    }
    if (c == '[') {
      const std::size_t at = pos_++;
      SkewElement x = expr();
      expect(']');
      return bracket(x, at);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return SkewElement::scalar(setting_, RatFunc(Rational(integer())));
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    const bool call = peek('(');
    if (!call) {
      if (auto v = setting_->lookup(name)) return SkewElement::scalar(setting_, RatFunc::variable(*v));
    }
    if (name == "e" || call) return SkewElement::term(setting_, RatFunc(1), automorphism(name, start));
    fail_at(start, "unknown name '" + name + "'");
  }

  AffineAut automorphism(const std::string& name, std::size_t start) {
    const std::size_t n = setting_->nvars();
    if (name == "e") return AffineAut::identity(n);
    if (name == "d") {
      expect('(');
      const Integer k = integer();
      expect(',');
      const Integer i = integer();
      expect(')');
      if (!k.fits_sint_p() || !i.fits_sint_p()) fail_at(start, "index out of range");
      try {
        return gt_delta(*setting_, static_cast<int>(k.get_si()), static_cast<int>(i.get_si()));
      } catch (const Error& e) {
        fail_at(start, e.what());
      }
    }
    if (name == "s") {
      expect('(');
      const Integer i = integer();
      expect(')');
      const auto& gens = setting_->monoid().generators();
      if (i < 1 || i > static_cast<long>(gens.size())) {
        fail_at(start, "s(" + i.get_str() + "): M has " + std::to_string(gens.size()) + " generators");
      }
      return gens[i.get_ui() - 1];
    }
    if (name == "shift") {
      expect('(');
      std::vector<Rational> v{rational()};
      while (accept(',')) v.push_back(rational());
      expect(')');
      if (v.size() != n) fail_at(start, "shift needs " + std::to_string(n) + " entries");
      return AffineAut::shift(std::move(v));
    }
    if (name == "aff") {
      expect('(');
      std::vector<VarId> perm;
      do {
        const Integer p = integer();
        if (p >= static_cast<long>(n)) fail_at(start, "permutation entry out of range");
        perm.push_back(static_cast<VarId>(p.get_ui()));
      } while (accept(','));
      expect(';');
      std::vector<Rational> scale{rational()};
      while (accept(',')) scale.push_back(rational());
      expect(';');
      std::vector<Rational> shift{rational()};
      while (accept(',')) shift.push_back(rational());
      expect(')');
      if (perm.size() != n || scale.size() != n || shift.size() != n) {
        fail_at(start, "aff needs " + std::to_string(n) + " entries per block");
      }
      try {
        return AffineAut(std::move(perm), std::move(scale), std::move(shift));
      } catch (const Error& e) {
        fail_at(start, e.what());
      }
    }
    fail_at(start, "unknown automorphism '" + name + "'");
  }

  SkewElement bracket(const SkewElement& x, std::size_t at) {
    if (x.is_zero()) return x;
    if (x.size() != 1) fail_at(at, "[...] needs a single term a * phi");
    const auto& [phi, a] = *x.terms().begin();
    return make_invariant(setting_, a, phi).element();
  }

  SettingPtr setting_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SkewElement parse_element(const SettingPtr& setting, std::string_view text) {
  return ElementParser(setting, text).parse_all();
}

InvariantElement parse_invariant(const SettingPtr& setting, std::string_view text) {
  return InvariantElement(parse_element(setting, text));
}

AffineAut parse_aut(const SettingPtr& setting, std::string_view text) {
  return ElementParser(setting, text).parse_aut_only();
}

}  // namespace skewforge
