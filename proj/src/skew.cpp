#include "skewforge/skew.hpp"

#include <algorithm>
#include <numeric>

#include "skewforge/error.hpp"

namespace skewforge {

// ------------------------------------------------------------- SkewElement

SkewElement SkewElement::term(SettingPtr setting, const RatFunc& coeff, const AffineAut& aut) {
  if (aut.size() != setting->nvars()) throw Error(Errc::SettingMismatch, "automorphism of another setting");
  SkewElement x(std::move(setting));
  x.add_term(aut, coeff);
  return x;
}

SkewElement SkewElement::scalar(SettingPtr setting, const RatFunc& coeff) {
  const auto n = setting->nvars();
  return term(std::move(setting), coeff, AffineAut::identity(n));
}

RatFunc SkewElement::coefficient(const AffineAut& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

RatFunc SkewElement::right_coefficient(const AffineAut& m) const {
  return apply_automorphism(invert(m), coefficient(m));
}

void SkewElement::add_term(const AffineAut& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SkewElement::check_same(const SkewElement& o) const {
  if (setting_ != o.setting_ && (setting_->label() != o.setting_->label() || setting_->nvars() != o.setting_->nvars())) {
    throw Error(Errc::SettingMismatch, "elements of settings '" + setting_->label() + "' and '" +
                                           o.setting_->label() + "'");
  }
}

SkewElement SkewElement::operator-() const {
  SkewElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
  SkewElement out = *this;
  out += o;
  return out;
}

SkewElement SkewElement::operator-(const SkewElement& o) const { return *this + (-o); }

SkewElement SkewElement::scaled(const RatFunc& f) const {
  SkewElement out(setting_);
  if (f.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, f * c);
  return out;
}

bool SkewElement::operator==(const SkewElement& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

SkewElement skew_mul(const SkewElement& x, const SkewElement& y) {
  SkewElement out(x.setting());
  out += SkewElement(y.setting());  // only checks the settings match
  for (const auto& [m1, r1] : x.terms()) {
    for (const auto& [m2, r2] : y.terms()) {
      out.add_term(compose(m1, m2), r1 * apply_automorphism(m1, r2));
    }
  }
  return out;
}

SkewElement operator*(const SkewElement& x, const SkewElement& y) { return skew_mul(x, y); }

SkewElement commutator(const SkewElement& x, const SkewElement& y) { return skew_mul(x, y) - skew_mul(y, x); }

SkewElement skew_inverse(const SkewElement& x) {
  if (x.size() != 1) throw Error(Errc::NotInvertible, "only single nonzero terms are invertible");
  const auto& [m, a] = *x.terms().begin();
  const AffineAut inv = invert(m);
  return SkewElement::term(x.setting(), apply_automorphism(inv, a.inverse()), inv);
}

SkewElement skew_pow(const SkewElement& x, int e) {
  if (e < 0) return skew_pow(skew_inverse(x), -e);
  SkewElement out = SkewElement::scalar(x.setting(), RatFunc(1));
  SkewElement base = x;
  while (e > 0) {
    if (e & 1) out = skew_mul(out, base);
    e >>= 1;
    if (e > 0) base = skew_mul(base, base);
  }
  return out;
}

std::vector<AffineAut> support(const SkewElement& x) {
  std::vector<AffineAut> out;
  out.reserve(x.size());
  for (const auto& [m, c] : x.terms()) out.push_back(m);
  return out;
}

bool is_invariant(const SkewElement& x) {
  for (const auto& g : x.setting()->group().generators()) {
    for (const auto& [m, c] : x.terms()) {
      if (!(x.coefficient(conjugate(g, m)) == apply_automorphism(g, c))) return false;
    }
  }
  return true;
}

InvariantElement::InvariantElement(SkewElement x) : x_(std::move(x)) {
  if (!is_invariant(x_)) throw Error(Errc::NotInvariant, "element is not G-invariant: " + format_element(x_));
}

InvariantElement operator*(const InvariantElement& x, const InvariantElement& y) {
  return InvariantElement(skew_mul(x.element(), y.element()));
}

InvariantElement make_invariant(const SettingPtr& setting, const RatFunc& a, const AffineAut& phi) {
  if (phi.size() != setting->nvars()) throw Error(Errc::SettingMismatch, "automorphism of another setting");
  if (a.is_zero()) return InvariantElement::zero(setting);
  const auto so = stabilizer_and_orbit(setting->group(), phi);
  for (const auto& h : so.stabilizer.elements()) {
    if (!(apply_automorphism(h, a) == a)) {
      throw Error(Errc::NotStabilizerInvariant,
                  "coefficient " + setting->format(a) + " is moved by " + to_string(h) + " in H_phi");
    }
  }
  SkewElement x(setting);
  for (std::size_t i = 0; i < so.orbit.size(); ++i) {
    x.add_term(so.orbit[i], apply_automorphism(so.coset_reps[i], a));
  }
  return InvariantElement(std::move(x));
}

InvariantElement invariant_mul(const InvariantElement& x, const RatFunc& gamma, const InvariantElement& y) {
  if (!x.setting()->is_gamma_element(gamma)) {
    throw Error(Errc::NotGammaElement, x.setting()->format(gamma) + " is not a G-invariant polynomial");
  }
  const SkewElement g = SkewElement::scalar(x.setting(), gamma);
  return InvariantElement(skew_mul(skew_mul(x.element(), g), y.element()));
}

std::set<AffineAut> orbit_product(const FiniteGroup& group, const AffineAut& phi, const AffineAut& psi) {
  const auto a = stabilizer_and_orbit(group, phi).orbit;
  const auto b = stabilizer_and_orbit(group, psi).orbit;
  std::set<AffineAut> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(compose(x, y));
  }
  return out;
}

SkewElement restrict_support(const SkewElement& x, const std::set<AffineAut>& keep) {
  SkewElement out(x.setting());
  for (const auto& [m, c] : x.terms()) {
    if (keep.contains(m)) out.add_term(m, c);
  }
  return out;
}

// -------------------------------------------------------------- projection

namespace {

// Factor the operator prod_{s in T}(f u - u s^-1(f)) contributes at m.
RatFunc projection_factor(const AffineAut& m, const std::vector<AffineAut>& removed, const RatFunc& f) {
  RatFunc factor(1);
  for (const auto& s : removed) {
    factor *= f - apply_automorphism(compose(m, invert(s)), f);
    if (factor.is_zero()) break;
  }
  return factor;
}

std::vector<RatFunc> projection_candidates(const std::vector<RatFunc>& gens, std::size_t cap) {
  std::vector<RatFunc> out;
  for (const auto& g : gens) {
    if (out.size() >= cap) return out;
    out.push_back(g);
  }
  if (gens.empty()) return out;
  // sum_i c^i gamma_i, then sum_i c^i gamma_i + gamma_0^2 for c = 2, 3, ...
  for (long c = 2; out.size() < cap; ++c) {
    RatFunc f;
    RatFunc w(1);
    for (const auto& g : gens) {
      w *= RatFunc(c);
      f += w * g;
    }
    out.push_back(f);
    if (out.size() < cap) out.push_back(f + gens.front() * gens.front());
  }
  return out;
}

}  // namespace

Projection project_component(const InvariantElement& x, const std::set<AffineAut>& keep,
                             const std::optional<RatFunc>& f) {
  const Setting& setting = *x.setting();
  std::vector<AffineAut> removed;
  std::vector<AffineAut> kept;
  for (const auto& [m, c] : x.element().terms()) (keep.contains(m) ? kept : removed).push_back(m);

  auto apply = [&](const RatFunc& fn) {
    SkewElement out(x.setting());
    for (const auto& m : kept) out.add_term(m, x.element().coefficient(m) * projection_factor(m, removed, fn));
    return out;
  };

  if (f) {
    if (!setting.is_gamma_element(*f)) {
      throw Error(Errc::NotGammaElement, setting.format(*f) + " is not a G-invariant polynomial");
    }
    return {InvariantElement(apply(*f)), *f};
  }
  // Empty operator, or nothing to keep: no choice of f matters.
  if (removed.empty()) return {x, RatFunc(1)};
  if (kept.empty()) return {InvariantElement::zero(x.setting()), RatFunc(1)};
  for (const auto& candidate : projection_candidates(setting.gamma_gens(), 100)) {
    SkewElement out = apply(candidate);
    if (out.size() == kept.size()) return {InvariantElement(std::move(out)), candidate};
  }
  throw Error(Errc::ProjectionSearchFailed, "no projecting element of Gamma among 100 candidates");
}

// ------------------------------------------------------- structural probes

std::vector<DoubleCoset> decompose_bimodule_classes(const InvariantElement& x) {
  if (x.is_zero()) throw Error(Errc::ZeroElement, "the zero element has no bimodule classes");
  const FiniteGroup& group = x.setting()->group();
  std::set<AffineAut> covered;
  std::vector<DoubleCoset> out;
  for (const auto& [m, c] : x.element().terms()) {
    if (covered.contains(m)) continue;
    for (const auto& o : stabilizer_and_orbit(group, m).orbit) covered.insert(o);
    DoubleCoset dc = canonical_double_coset(group, m);
    if (std::find(out.begin(), out.end(), dc) == out.end()) out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool center_membership(const InvariantElement& x) {
  if (x.is_zero()) return true;
  const auto& terms = x.element().terms();
  if (terms.size() != 1 || !terms.begin()->first.is_identity()) return false;
  const RatFunc& c = terms.begin()->second;
  if (!x.setting()->is_g_invariant(c)) return false;
  for (const auto& m : x.setting()->monoid().generators()) {
    if (!(apply_automorphism(m, c) == c)) return false;
  }
  return true;
}

std::optional<RatFunc> noncommute_witness(const InvariantElement& x) {
  const auto& setting = x.setting();
  for (const auto& [m, c] : x.element().terms()) {
    if (m.is_identity()) continue;
    for (const auto& gamma : setting->gamma_gens()) {
      if (apply_automorphism(m, gamma) == gamma) continue;
      const SkewElement g = SkewElement::scalar(setting, gamma);
      if (!commutator(g, x.element()).is_zero()) return gamma;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------- semigroup generation

namespace {

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

// Row-reduces over Q; returns the rank and leaves m in reduced echelon form.
std::size_t rational_rank(std::vector<RatVec>& m, std::size_t cols, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return row;
}

// Index of the subgroup generated by vecs in Z^r, zero if of lower rank.
Integer lattice_index(std::vector<IntVec> rows, std::size_t r) {
  Integer index = 1;
  std::size_t top = 0;
  for (std::size_t c = 0; c < r; ++c) {
    // Euclid on column c among rows top..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      }
      if (best == rows.size()) return 0;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = rows[i][c] / rows[top][c];
        for (std::size_t k = c; k < r; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    index *= abs(rows[top][c]);
    ++top;
  }
  return index;
}

// Whether the cone spanned by vecs is all of Q^r.
bool cone_is_everything(const std::vector<IntVec>& vecs, std::size_t r) {
  std::vector<RatVec> m;
  for (const auto& v : vecs) m.emplace_back(v.begin(), v.end());
  auto copy = m;
  if (rational_rank(copy, r) < r) return false;
  // A proper full-dimensional cone has a facet spanned by r-1 independent
  // generators; its normal then sees every generator on one side.
  const std::size_t k = r - 1;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    std::vector<RatVec> sub;
    for (auto i : pick) sub.push_back(m[i]);
    std::vector<std::size_t> pivots;
    if (rational_rank(sub, r, &pivots) == k) {
      std::size_t free = 0;
      while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
      RatVec y(r, 0);
      y[free] = 1;
      for (std::size_t i = 0; i < k; ++i) y[pivots[i]] = -sub[i][free];
      bool nonneg = true;
      bool nonpos = true;
      for (const auto& v : m) {
        Rational dot = 0;
        for (std::size_t j = 0; j < r; ++j) dot += y[j] * v[j];
        if (dot < 0) nonneg = false;
        if (dot > 0) nonpos = false;
      }
      if (nonneg || nonpos) return false;
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace

bool galois_generator_check(const Setting& setting, const std::vector<InvariantElement>& gens) {
  std::set<AffineAut> supp;
  for (const auto& g : gens) {
    for (const auto& [m, c] : g.element().terms()) supp.insert(m);
  }
  if (supp.empty()) return false;
  const ShiftMonoid& monoid = setting.monoid();
  if (monoid.is_lattice()) {
    const std::size_t r = monoid.rank();
    std::vector<IntVec> vecs;
    for (const auto& m : supp) {
      auto coords = monoid.coordinates(m);
      if (!coords) return false;
      if (std::any_of(coords->begin(), coords->end(), [](const Integer& c) { return c != 0; })) {
        vecs.push_back(*std::move(coords));
      }
    }
    if (r == 0) return true;
    if (vecs.empty()) return false;
    return lattice_index(vecs, r) == 1 && cone_is_everything(vecs, r);
  }
  const auto whole = monoid.enumerate(16);
  if (!whole.complete) throw Error(Errc::UnsupportedMonoid, "semigroup generation needs a lattice or finite M");
  std::vector<AffineAut> sgens;
  for (const auto& m : supp) {
    if (std::find(whole.elements.begin(), whole.elements.end(), m) == whole.elements.end()) return false;
    sgens.push_back(m);
  }
  // The subsemigroup generated by sgens, closed under composition.
  std::set<AffineAut> reached(sgens.begin(), sgens.end());
  std::vector<AffineAut> frontier(sgens.begin(), sgens.end());
  while (!frontier.empty()) {
    std::vector<AffineAut> next;
    for (const auto& x : frontier) {
      for (const auto& s : sgens) {
        AffineAut y = compose(x, s);
        if (reached.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return reached.size() == whole.elements.size();
}

IdealClosure ideal_support_closure(const Setting& setting, const std::vector<AffineAut>& s) {
  if (s.empty()) throw Error(Errc::EmptySupport, "ideal generated by the empty set");
  IdealClosure out;
  const ShiftMonoid& monoid = setting.monoid();
  if (monoid.is_lattice()) {
    out.whole_monoid = true;
    return out;
  }
  constexpr std::size_t kBound = 8;
  const auto en = monoid.enumerate(kBound);
  auto invertible = [&](const AffineAut& a) {
    const AffineAut inv = invert(a);
    return std::find(en.elements.begin(), en.elements.end(), inv) != en.elements.end();
  };
  if (en.complete || std::any_of(s.begin(), s.end(), invertible)) {
    out.whole_monoid = true;
    return out;
  }
  std::set<AffineAut> orbit;
  for (const auto& a : s) {
    for (const auto& o : stabilizer_and_orbit(setting.group(), a).orbit) orbit.insert(o);
  }
  // Drop generators that are multiples of another one.
  auto divides = [&](const AffineAut& d, const AffineAut& t) {
    for (const auto& m : en.elements) {
      if (compose(d, m) == t || compose(m, d) == t) return true;
      for (const auto& m2 : en.elements) {
        if (compose(compose(m, d), m2) == t) return true;
      }
    }
    return false;
  };
  for (const auto& t : orbit) {
    bool redundant = false;
    for (const auto& d : orbit) {
      if (!(d == t) && divides(d, t)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.generators.push_back(t);
  }
  return out;
}

// ------------------------------------------------------------------- I/O

std::string format_element(const SkewElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + x.setting()->format(c) + ")*" + to_string(m);
  }
  return out;
}

nlohmann::json element_to_json(const SkewElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  const auto n = x.setting()->nvars();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back({{"aut", aut_to_json(m)}, {"coeff", ratfunc_to_json(c, n)}});
  }
  return {{"setting", x.setting()->label()}, {"terms", terms}};
}

SkewElement element_from_json(const SettingPtr& setting, const nlohmann::json& j) {
  if (j.at("setting").get<std::string>() != setting->label()) {
    throw Error(Errc::SettingMismatch, "element belongs to setting '" + j.at("setting").get<std::string>() + "'");
  }
  SkewElement x(setting);
  for (const auto& t : j.at("terms")) {
    const AffineAut m = aut_from_json(t.at("aut"));
    if (m.size() != setting->nvars()) throw Error(Errc::SettingMismatch, "automorphism of another setting");
    x.add_term(m, ratfunc_from_json(t.at("coeff")));
  }
  return x;
}

}  // namespace skewforge
