#include "skewforge/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "skewforge/error.hpp"

namespace skewforge {

// --------------------------------------------------------------- AffineAut

AffineAut::AffineAut(std::vector<VarId> perm, std::vector<Rational> scale, std::vector<Rational> shift)
    : perm_(std::move(perm)), scale_(std::move(scale)), shift_(std::move(shift)) {
  const auto n = perm_.size();
  if (scale_.size() != n || shift_.size() != n) {
    throw Error(Errc::SettingMismatch, "automorphism components have different lengths");
  }
  std::vector<bool> seen(n, false);
  for (VarId p : perm_) {
    if (p >= n || seen[p]) throw Error(Errc::InvalidSetting, "automorphism permutation is not a bijection");
    seen[p] = true;
  }
  for (const auto& s : scale_) {
    if (s == 0) throw Error(Errc::InvalidSetting, "automorphism scale must be nonzero");
  }
}

AffineAut AffineAut::identity(std::size_t nvars) {
  std::vector<VarId> perm(nvars);
  std::iota(perm.begin(), perm.end(), VarId{0});
  return AffineAut(std::move(perm), std::vector<Rational>(nvars, 1), std::vector<Rational>(nvars, 0));
}

AffineAut AffineAut::shift(std::vector<Rational> vector) {
  const auto n = vector.size();
  std::vector<VarId> perm(n);
  std::iota(perm.begin(), perm.end(), VarId{0});
  return AffineAut(std::move(perm), std::vector<Rational>(n, 1), std::move(vector));
}

AffineAut AffineAut::permutation(std::vector<VarId> perm) {
  const auto n = perm.size();
  return AffineAut(std::move(perm), std::vector<Rational>(n, 1), std::vector<Rational>(n, 0));
}

bool AffineAut::is_pure_shift() const {
  for (std::size_t v = 0; v < perm_.size(); ++v) {
    if (perm_[v] != v || scale_[v] != 1) return false;
  }
  return true;
}

bool AffineAut::is_identity() const {
  if (!is_pure_shift()) return false;
  return std::all_of(shift_.begin(), shift_.end(), [](const Rational& b) { return b == 0; });
}

std::vector<Poly> AffineAut::images() const {
  std::vector<Poly> out;
  out.reserve(perm_.size());
  for (std::size_t v = 0; v < perm_.size(); ++v) {
    out.push_back(Poly::variable(perm_[v]) * scale_[v] + Poly(shift_[v]));
  }
  return out;
}

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  const int c = ::cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering AffineAut::operator<=>(const AffineAut& o) const {
  if (auto c = perm_ <=> o.perm_; c != 0) return c;
  for (std::size_t i = 0; i < std::min(scale_.size(), o.scale_.size()); ++i) {
    if (auto c = cmp(scale_[i], o.scale_[i]); c != 0) return c;
  }
  if (scale_.size() != o.scale_.size()) return scale_.size() <=> o.scale_.size();
  for (std::size_t i = 0; i < shift_.size(); ++i) {
    if (auto c = cmp(shift_[i], o.shift_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t AffineAut::hash() const noexcept {
  std::size_t h = perm_.size();
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (VarId p : perm_) mix(p);
  for (const auto& s : scale_) mix(mpz_get_si(s.get_num_mpz_t()) * 7919 + mpz_get_ui(s.get_den_mpz_t()));
  for (const auto& s : shift_) mix(mpz_get_si(s.get_num_mpz_t()) * 104729 + mpz_get_ui(s.get_den_mpz_t()));
  return h;
}

RatFunc apply_automorphism(const AffineAut& a, const RatFunc& f) {
  if (f.is_constant()) return f;
  if (a.is_identity()) {
    for (VarId v : f.variables()) {
      if (v >= a.size()) throw Error(Errc::UnknownVariable, "variable outside the setting");
    }
    return f;
  }
  const auto images = a.images();
  return f.substitute_invertible(images);
}

Poly apply_automorphism(const AffineAut& a, const Poly& f) {
  if (f.is_constant()) return f;
  const auto images = a.images();
  return f.substitute(images);
}

AffineAut compose(const AffineAut& a, const AffineAut& b) {
  if (a.size() != b.size()) throw Error(Errc::SettingMismatch, "composing automorphisms of different settings");
  const auto n = a.size();
  std::vector<VarId> perm(n);
  std::vector<Rational> scale(n);
  std::vector<Rational> shift(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VarId w = b.perm()[v];
    perm[v] = a.perm()[w];
    scale[v] = b.scale()[v] * a.scale()[w];
    shift[v] = b.scale()[v] * a.shift_vector()[w] + b.shift_vector()[v];
  }
  return AffineAut(std::move(perm), std::move(scale), std::move(shift));
}

AffineAut invert(const AffineAut& a) {
  const auto n = a.size();
  std::vector<VarId> perm(n);
  std::vector<Rational> scale(n);
  std::vector<Rational> shift(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VarId w = a.perm()[v];
    perm[w] = static_cast<VarId>(v);
    scale[w] = 1 / a.scale()[v];
    shift[w] = -a.shift_vector()[v] / a.scale()[v];
  }
  return AffineAut(std::move(perm), std::move(scale), std::move(shift));
}

AffineAut conjugate(const AffineAut& g, const AffineAut& phi) { return compose(compose(g, phi), invert(g)); }

std::string to_string(const AffineAut& a) {
  if (a.is_identity()) return "e";
  std::ostringstream out;
  auto list = [&out](const auto& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  };
  if (a.is_pure_shift()) {
    out << "shift(";
    list(a.shift_vector());
    out << ")";
    return out.str();
  }
  out << "aff(";
  list(a.perm());
  out << ";";
  list(a.scale());
  out << ";";
  list(a.shift_vector());
  out << ")";
  return out.str();
}

nlohmann::json aut_to_json(const AffineAut& a) {
  nlohmann::json scale = nlohmann::json::array();
  nlohmann::json shift = nlohmann::json::array();
  for (const auto& s : a.scale()) scale.push_back(s.get_str());
  for (const auto& s : a.shift_vector()) shift.push_back(s.get_str());
  return {{"perm", a.perm()}, {"scale", scale}, {"shift", shift}};
}

AffineAut aut_from_json(const nlohmann::json& j) {
  std::vector<Rational> scale;
  std::vector<Rational> shift;
  for (const auto& s : j.at("scale")) scale.push_back(parse_rational(s.get<std::string>()));
  for (const auto& s : j.at("shift")) shift.push_back(parse_rational(s.get<std::string>()));
  return AffineAut(j.at("perm").get<std::vector<VarId>>(), std::move(scale), std::move(shift));
}

// ------------------------------------------------------------- FiniteGroup

void FiniteGroup::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> FiniteGroup::index_of(const AffineAut& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup FiniteGroup::trivial(std::size_t nvars) {
  return from_closed_elements({AffineAut::identity(nvars)}, nvars);
}

FiniteGroup FiniteGroup::from_closed_elements(std::vector<AffineAut> elements, std::size_t nvars,
                                              std::optional<std::vector<AffineAut>> generators) {
  FiniteGroup g;
  g.nvars_ = nvars;
  g.elements_ = std::move(elements);
  if (generators) {
    g.generators_ = *std::move(generators);
  } else {
    for (const auto& e : g.elements_) {
      if (!e.is_identity()) g.generators_.push_back(e);
    }
  }
  g.reindex();
  return g;
}

FiniteGroup group_closure(std::span<const AffineAut> gens, std::size_t nvars, std::size_t cap) {
  if (cap < 1) throw Error(Errc::ClosureCapExceeded, "closure cap must be at least 1");
  FiniteGroup g;
  g.nvars_ = nvars;
  for (const auto& s : gens) {
    if (s.size() != nvars) throw Error(Errc::SettingMismatch, "generator acts on a different variable set");
    if (!s.is_identity()) g.generators_.push_back(s);
  }
  g.elements_.push_back(AffineAut::identity(nvars));
  g.index_.emplace(g.elements_.front(), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : g.generators_) {
      AffineAut next = compose(g.elements_[head], s);
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() >= cap) {
        throw Error(Errc::ClosureCapExceeded,
                    "group closure exceeded " + std::to_string(cap) + " elements (infinite group?)");
      }
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = a.nvars();
  const auto n = na + b.nvars();
  auto combine = [&](const AffineAut& x, const AffineAut& y) {
    std::vector<VarId> perm(x.perm());
    std::vector<Rational> scale(x.scale());
    std::vector<Rational> shift(x.shift_vector());
    for (std::size_t v = 0; v < y.size(); ++v) {
      perm.push_back(static_cast<VarId>(y.perm()[v] + na));
      scale.push_back(y.scale()[v]);
      shift.push_back(y.shift_vector()[v]);
    }
    return AffineAut(std::move(perm), std::move(scale), std::move(shift));
  };
  std::vector<AffineAut> elements;
  elements.reserve(a.order() * b.order());
  for (const auto& y : b.elements()) {
    for (const auto& x : a.elements()) elements.push_back(combine(x, y));
  }
  std::vector<AffineAut> gens;
  const AffineAut ea = AffineAut::identity(na);
  const AffineAut eb = AffineAut::identity(b.nvars());
  for (const auto& x : a.generators()) gens.push_back(combine(x, eb));
  for (const auto& y : b.generators()) gens.push_back(combine(ea, y));
  return FiniteGroup::from_closed_elements(std::move(elements), n, std::move(gens));
}

StabilizerOrbit stabilizer_and_orbit(const FiniteGroup& group, const AffineAut& phi) {
  StabilizerOrbit out;
  std::vector<AffineAut> stab;
  std::unordered_set<AffineAut, AffineAutHash> seen;
  for (const auto& g : group.elements()) {
    AffineAut c = conjugate(g, phi);
    if (c == phi) stab.push_back(g);
    if (seen.insert(c).second) {
      out.orbit.push_back(std::move(c));
      out.coset_reps.push_back(g);
    }
  }
  out.stabilizer = FiniteGroup::from_closed_elements(std::move(stab), group.nvars());
  return out;
}

FiniteGroup embedding_stabilizer(const FiniteGroup& group, const AffineAut& phi) {
  const AffineAut phi_inv = invert(phi);
  std::vector<AffineAut> stab;
  for (const auto& h : group.elements()) {
    if (group.contains(compose(phi_inv, compose(h, phi)))) stab.push_back(h);
  }
  return FiniteGroup::from_closed_elements(std::move(stab), group.nvars());
}

bool double_coset_equal(const FiniteGroup& group, const AffineAut& phi, const AffineAut& psi) {
  for (const auto& g : group.elements()) {
    if (group.contains(compose(invert(compose(g, phi)), psi))) return true;
  }
  return false;
}

DoubleCoset canonical_double_coset(const FiniteGroup& group, const AffineAut& phi) {
  DoubleCoset dc;
  dc.rep = phi;
  for (const auto& g1 : group.elements()) {
    const AffineAut left = compose(g1, phi);
    for (const auto& g2 : group.elements()) {
      AffineAut candidate = compose(left, g2);
      if (!dc.has_pure_shift && candidate.is_pure_shift()) dc.has_pure_shift = true;
      if (candidate < dc.rep) dc.rep = std::move(candidate);
    }
  }
  dc.stab_order = embedding_stabilizer(group, dc.rep).order();
  dc.orbit_size = group.order() / dc.stab_order;
  return dc;
}

std::vector<std::vector<AffineAut>> g_equivalence_classes(const FiniteGroup& group, const AffineAut& phi,
                                                          const AffineAut& psi) {
  std::vector<std::vector<AffineAut>> classes;
  std::vector<AffineAut> reps;
  for (const auto& g : group.elements()) {
    const AffineAut rep = canonical_double_coset(group, compose(compose(phi, g), psi)).rep;
    auto it = std::find(reps.begin(), reps.end(), rep);
    if (it == reps.end()) {
      reps.push_back(rep);
      classes.push_back({g});
    } else {
      classes[static_cast<std::size_t>(it - reps.begin())].push_back(g);
    }
  }
  return classes;
}

// ------------------------------------------------------------- ShiftMonoid

ShiftMonoid ShiftMonoid::lattice(std::vector<std::vector<Rational>> basis, std::size_t nvars) {
  ShiftMonoid m;
  m.kind_ = Kind::Lattice;
  m.nvars_ = nvars;
  for (auto& b : basis) {
    if (b.size() != nvars) throw Error(Errc::SettingMismatch, "lattice basis vector has the wrong length");
    m.generators_.push_back(AffineAut::shift(std::move(b)));
  }
  return m;
}

ShiftMonoid ShiftMonoid::generated(std::vector<AffineAut> generators, std::size_t nvars) {
  ShiftMonoid m;
  m.kind_ = Kind::Generated;
  m.nvars_ = nvars;
  for (auto& g : generators) {
    if (g.size() != nvars) throw Error(Errc::SettingMismatch, "monoid generator has the wrong size");
  }
  m.generators_ = std::move(generators);
  return m;
}

std::optional<std::vector<Integer>> ShiftMonoid::coordinates(const AffineAut& a) const {
  if (kind_ != Kind::Lattice) throw Error(Errc::UnsupportedMonoid, "coordinates exist only for lattices");
  if (a.size() != nvars_) throw Error(Errc::SettingMismatch, "automorphism of another setting");
  if (!a.is_pure_shift()) return std::nullopt;
  const std::size_t rows = nvars_;
  const std::size_t cols = generators_.size();
  // Row reduce [B | s].
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = generators_[c].shift_vector()[r];
    m[r][cols] = a.shift_vector()[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  std::vector<Integer> coords(cols, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    const Rational& x = m[i][cols];
    if (x.get_den() != 1) return std::nullopt;
    coords[pivot_cols[i]] = x.get_num();
  }
  return coords;
}

AffineAut ShiftMonoid::element(std::span<const Integer> coords) const {
  if (kind_ != Kind::Lattice) throw Error(Errc::UnsupportedMonoid, "element() needs a lattice");
  std::vector<Rational> shift(nvars_, 0);
  for (std::size_t i = 0; i < coords.size() && i < generators_.size(); ++i) {
    for (std::size_t v = 0; v < nvars_; ++v) shift[v] += Rational(coords[i]) * generators_[i].shift_vector()[v];
  }
  return AffineAut::shift(std::move(shift));
}

ShiftMonoid::Enumeration ShiftMonoid::enumerate(std::size_t bound) const {
  Enumeration out;
  std::unordered_set<AffineAut, AffineAutHash> seen;
  out.elements.push_back(AffineAut::identity(nvars_));
  seen.insert(out.elements.front());
  std::vector<AffineAut> frontier = out.elements;
  for (std::size_t len = 0; len < bound; ++len) {
    std::vector<AffineAut> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        AffineAut y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (next.empty()) {
      out.complete = true;
      return out;
    }
    out.elements.insert(out.elements.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  // One more level decides completeness without extending the bound.
  for (const auto& x : frontier) {
    for (const auto& g : generators_) {
      if (!seen.contains(compose(x, g))) return out;
    }
  }
  out.complete = true;
  return out;
}

bool ShiftMonoid::contains(const AffineAut& a, std::size_t word_bound) const {
  if (kind_ == Kind::Lattice) return coordinates(a).has_value();
  const auto en = enumerate(word_bound);
  return std::find(en.elements.begin(), en.elements.end(), a) != en.elements.end();
}

bool normalizes_check(const FiniteGroup& group, const ShiftMonoid& monoid) {
  const auto& gens = group.generators().empty() ? group.elements() : group.generators();
  for (const auto& g : gens) {
    for (const auto& m : monoid.generators()) {
      if (!monoid.contains(conjugate(g, m))) return false;
    }
  }
  return true;
}

namespace {

bool acts_trivially(const AffineAut& m, std::span<const RatFunc> gamma_gens) {
  return std::all_of(gamma_gens.begin(), gamma_gens.end(),
                     [&m](const RatFunc& g) { return apply_automorphism(m, g) == g; });
}

bool same_on(const AffineAut& a, const AffineAut& b, std::span<const RatFunc> gamma_gens) {
  return std::all_of(gamma_gens.begin(), gamma_gens.end(), [&](const RatFunc& g) {
    return apply_automorphism(a, g) == apply_automorphism(b, g);
  });
}

}  // namespace

bool restriction_equal_on_K(std::span<const RatFunc> gamma_gens, const AffineAut& m1, const AffineAut& m2) {
  return same_on(m1, m2, gamma_gens);
}

SeparationReport is_separating(std::span<const RatFunc> gamma_gens, const ShiftMonoid& monoid,
                               const FiniteGroup& group, int ball) {
  SeparationReport report;
  const std::size_t n = monoid.nvars();
  const AffineAut e = AffineAut::identity(n);

  if (monoid.is_lattice()) {
    // Group case: m1|K = m2|K iff m1^-1 m2 acts trivially on K, so searching
    // nonzero lattice points is enough.
    const std::size_t rank = monoid.rank();
    int radius = std::max(ball, 0);
    auto points = [rank](int r) {
      double c = 1;
      for (std::size_t i = 0; i < rank; ++i) c *= 2.0 * r + 1;
      return c;
    };
    while (radius > 0 && points(radius) > 20000) --radius;
    if (radius > 0 && rank > 0) {
      std::vector<Integer> coords(rank, -radius);
      while (true) {
        const bool zero = std::all_of(coords.begin(), coords.end(), [](const Integer& c) { return c == 0; });
        if (!zero) {
          AffineAut m = monoid.element(coords);
          if (acts_trivially(m, gamma_gens)) {
            report.verdict = Tristate::False;
            report.witness = std::make_pair(std::move(m), e);
            return report;
          }
        }
        std::size_t i = 0;
        while (i < rank && coords[i] == radius) coords[i++] = -radius;
        if (i == rank) break;
        coords[i] += 1;
      }
    }
    for (const auto& b : monoid.generators()) {
      if (acts_trivially(b, gamma_gens)) {
        report.verdict = Tristate::False;
        report.witness = std::make_pair(b, e);
        return report;
      }
    }
    // Nonidentity pure shifts have infinite order, so they never lie in G.
    report.verdict = Tristate::True;
    return report;
  }

  const auto en = monoid.enumerate(static_cast<std::size_t>(std::max(ball, 1)));
  for (const auto& m : en.elements) {
    if (!m.is_identity() && group.contains(m)) {
      report.verdict = Tristate::False;
      report.witness = std::make_pair(m, e);
      return report;
    }
  }
  for (std::size_t i = 0; i < en.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < en.elements.size(); ++j) {
      if (same_on(en.elements[i], en.elements[j], gamma_gens)) {
        report.verdict = Tristate::False;
        report.witness = std::make_pair(en.elements[j], en.elements[i]);
        return report;
      }
    }
  }
  report.verdict = en.complete ? Tristate::True : Tristate::Unknown;
  return report;
}

}  // namespace skewforge
