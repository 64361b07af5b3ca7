#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "skewforge/ratfunc.hpp"

namespace skewforge::testing {

/// Parses over variables named x0..x9 plus the aliases x=x0, y=x1, z=x2, t=x0.
inline RatFunc rf(std::string_view text) {
  return parse_ratfunc(text, [](std::string_view name) -> std::optional<VarId> {
    if (name == "x" || name == "t") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '9') {
      return static_cast<VarId>(name[1] - '0');
    }
    return std::nullopt;
  });
}

inline Poly poly(std::string_view text) { return rf(text).as_poly(); }

/// Random polynomial with up to `terms` terms of degree <= `degree` in `nvars`
/// variables and small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t nvars, int degree, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(0, degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    std::vector<Monomial::Entry> mono;
    int budget = exp(rng);
    while (budget > 0) {
      std::uniform_int_distribution<int> take(1, budget);
      int e = take(rng);
      mono.emplace_back(static_cast<VarId>(var(rng)), e);
      budget -= e;
    }
    out.push_back({Monomial(std::move(mono)), Rational(coeff(rng))});
  }
  return Poly::from_terms(std::move(out));
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, std::size_t nvars, int degree, int terms) {
  while (true) {
    Poly p = random_poly(rng, nvars, degree, terms);
    if (!p.is_zero()) return p;
  }
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 7) {
  std::uniform_int_distribution<int> n(-bound, bound);
  std::uniform_int_distribution<int> d(1, bound);
  return make_rational(n(rng), d(rng));
}

}  // namespace skewforge::testing

#include "skewforge/error.hpp"
#include "skewforge/presets.hpp"

namespace skewforge::testing {

/// A tableau with no integer differences among the constrained pairs.
inline std::vector<Rational> random_generic_tableau(std::mt19937_64& rng, const Setting& gt) {
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  const int dens[] = {7, 11, 13, 17, 19, 23};
  while (true) {
    std::vector<Rational> base;
    for (std::size_t v = 0; v < gt.nvars(); ++v) base.push_back(make_rational(num(rng), dens[pick(rng)]));
    try {
      gt_check_generic(gt, base);
      return base;
    } catch (const Error&) {
    }
  }
}

}  // namespace skewforge::testing
