#include "skewforge/presets.hpp"

#include <algorithm>
#include <charconv>

#include "skewforge/error.hpp"

namespace skewforge {

namespace {

SettingPtr share(Setting s) { return std::make_shared<const Setting>(std::move(s)); }

// Elementary symmetric polynomials e_1..e_k of the given polynomials.
std::vector<Poly> elementary_symmetric(const std::vector<Poly>& xs) {
  std::vector<Poly> e{Poly(1)};
  for (const auto& x : xs) {
    e.push_back(Poly());
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += e[j - 1] * x;
  }
  e.erase(e.begin());
  return e;
}

AffineAut swap_vars(std::size_t nvars, VarId a, VarId b) {
  std::vector<VarId> perm(nvars);
  for (std::size_t v = 0; v < nvars; ++v) perm[v] = static_cast<VarId>(v);
  std::swap(perm[a], perm[b]);
  return AffineAut::permutation(std::move(perm));
}

std::vector<Rational> unit(std::size_t nvars, std::size_t v, const Rational& c) {
  std::vector<Rational> out(nvars, Rational(0));
  out[v] = c;
  return out;
}

SkewElement single(const SettingPtr& s, const RatFunc& c, const AffineAut& m) { return SkewElement::term(s, c, m); }

void fail_on(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.ok()) throw Error(Errc::RelationFailed, c.name + ", residual " + format_element(c.residual));
  }
}

}  // namespace

SkewElement act_by(const AffineAut& g, const SkewElement& x) {
  SkewElement out(x.setting());
  for (const auto& [m, c] : x.terms()) out.add_term(conjugate(g, m), apply_automorphism(g, c));
  return out;
}

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin

SettingPtr build_gt(int n) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "gt(n) needs n >= 1");
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      const auto id = static_cast<VarId>(vars.size());
      vars.push_back({id, "l" + std::to_string(i) + std::to_string(j), i, j});
    }
  }
  const std::size_t nv = vars.size();
  auto id_of = [](int i, int j) { return static_cast<VarId>((i - 1) * i / 2 + (j - 1)); };

  std::vector<AffineAut> gens;
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) gens.push_back(swap_vars(nv, id_of(i, j), id_of(i, j + 1)));
  }
  FiniteGroup group = gens.empty() ? FiniteGroup::trivial(nv) : group_closure(gens, nv, 1000000);

  std::vector<std::vector<Rational>> basis;
  for (int k = 1; k < n; ++k) {
    for (int i = 1; i <= k; ++i) basis.push_back(unit(nv, id_of(k, i), Rational(1)));
  }
  ShiftMonoid monoid = ShiftMonoid::lattice(std::move(basis), nv);

  std::vector<RatFunc> gamma;
  for (int i = 1; i <= n; ++i) {
    std::vector<Poly> row;
    for (int j = 1; j <= i; ++j) row.push_back(Poly::variable(id_of(i, j)));
    for (auto& e : elementary_symmetric(row)) gamma.emplace_back(std::move(e));
  }
  return share(Setting("gt(" + std::to_string(n) + ")", std::move(vars), std::move(group), std::move(monoid),
                       std::move(gamma)));
}

int gt_rank(const Setting& setting) {
  int n = 0;
  for (const auto& v : setting.variables()) n = std::max(n, v.row);
  const auto expect = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
  if (n == 0 || expect != setting.nvars() || !setting.at(n, n)) {
    throw Error(Errc::UnsupportedSetting, setting.label() + " is not a Gelfand-Tsetlin setting");
  }
  return n;
}

namespace {

VarId gt_var(const Setting& s, int row, int col) {
  const auto v = s.at(row, col);
  if (!v) throw Error(Errc::IndexOutOfRange, "no tableau entry at (" + std::to_string(row) + "," + std::to_string(col) + ")");
  return *v;
}

}  // namespace

AffineAut gt_delta(const Setting& setting, int k, int i) {
  const int n = gt_rank(setting);
  if (k < 1 || k >= n || i < 1 || i > k) {
    throw Error(Errc::IndexOutOfRange, "delta^{" + std::to_string(k) + std::to_string(i) + "} in gt(" +
                                           std::to_string(n) + ")");
  }
  return AffineAut::shift(unit(setting.nvars(), gt_var(setting, k, i), Rational(1)));
}

RatFunc gt_coefficient(const Setting& setting, int k, int i, int sign) {
  const int n = gt_rank(setting);
  if (k < 1 || k >= n || i < 1 || i > k || (sign != 1 && sign != -1)) {
    throw Error(Errc::IndexOutOfRange, "a_{" + std::to_string(k) + std::to_string(i) + "} in gt(" +
                                           std::to_string(n) + ")");
  }
  const Poly lki = Poly::variable(gt_var(setting, k, i));
  const int other = k + sign;
  Poly num(sign > 0 ? -1 : 1);
  for (int j = 1; j <= other; ++j) num *= Poly::variable(gt_var(setting, other, j)) - lki;
  Poly den(1);
  for (int j = 1; j <= k; ++j) {
    if (j != i) den *= Poly::variable(gt_var(setting, k, j)) - lki;
  }
  return RatFunc::make(num, den);
}

InvariantElement gt_generator_image(const SettingPtr& setting, int k, int sign) {
  const int n = gt_rank(*setting);
  if (k < 1 || k >= n) {
    throw Error(Errc::IndexOutOfRange, "E_" + std::to_string(k) + " in gt(" + std::to_string(n) + ")");
  }
  const AffineAut d = gt_delta(*setting, k, 1);
  const AffineAut phi = sign > 0 ? d : invert(d);
  return make_invariant(setting, apply_automorphism(phi, gt_coefficient(*setting, k, 1, sign)), phi);
}

std::vector<RelationCheck> gt_relation_checks(const SettingPtr& setting) {
  const int n = gt_rank(*setting);
  std::vector<RelationCheck> out;
  if (n < 2) return out;
  std::vector<SkewElement> ep, em, h;
  for (int k = 1; k < n; ++k) {
    ep.push_back(gt_generator_image(setting, k, 1).element());
    em.push_back(gt_generator_image(setting, k, -1).element());
  }
  const AffineAut e = AffineAut::identity(setting->nvars());
  auto tag = [](const char* what, int i, int j) {
    return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int k = 0; k + 1 < n; ++k) {
    h.push_back(commutator(ep[k], em[k]));
    SkewElement off = h.back() - restrict_support(h.back(), {e});
    out.push_back({tag("h support", k + 1, k + 1), off});
    const RatFunc c = h.back().coefficient(e);
    out.push_back({tag("h coefficient in Gamma", k + 1, k + 1),
                   setting->is_gamma_element(c) ? SkewElement(setting) : SkewElement::scalar(setting, c)});
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      if (i != j) out.push_back({tag("[E+,E-]", i + 1, j + 1), commutator(ep[i], em[j])});
      const int dist = std::abs(i - j);
      const long cij = i == j ? 2 : (dist == 1 ? -1 : 0);
      out.push_back({tag("[h,E+] cartan", i + 1, j + 1), commutator(h[i], ep[j]) - ep[j].scaled(RatFunc(cij))});
      out.push_back({tag("[h,E-] cartan", i + 1, j + 1), commutator(h[i], em[j]) + em[j].scaled(RatFunc(cij))});
      if (dist == 1) {
        out.push_back({tag("serre+", i + 1, j + 1), commutator(ep[i], commutator(ep[i], ep[j]))});
        out.push_back({tag("serre-", i + 1, j + 1), commutator(em[i], commutator(em[i], em[j]))});
      } else if (dist >= 2) {
        out.push_back({tag("[E+,E+] far", i + 1, j + 1), commutator(ep[i], ep[j])});
        out.push_back({tag("[E-,E-] far", i + 1, j + 1), commutator(em[i], em[j])});
      }
    }
  }
  return out;
}

std::vector<RelationCheck> gt_verify_relations(const SettingPtr& setting) {
  auto checks = gt_relation_checks(setting);
  fail_on(checks);
  return checks;
}

void gt_check_generic(const Setting& setting, const std::vector<Rational>& base) {
  const int n = gt_rank(setting);
  if (base.size() != setting.nvars()) throw Error(Errc::SettingMismatch, "tableau has the wrong length");
  auto bad = [&](int r1, int c1, int r2, int c2) {
    const Rational d = base[gt_var(setting, r1, c1)] - base[gt_var(setting, r2, c2)];
    if (d.get_den() == 1) {
      throw Error(Errc::NonGenericTableau, "l" + std::to_string(r1) + std::to_string(c1) + " - l" +
                                               std::to_string(r2) + std::to_string(c2) + " = " + d.get_str());
    }
  };
  for (int r = 1; r <= n; ++r) {
    for (int c1 = 1; c1 <= r; ++c1) {
      for (int c2 = c1 + 1; c2 <= r; ++c2) bad(r, c1, r, c2);
      if (r < n) {
        for (int c2 = 1; c2 <= r + 1; ++c2) bad(r, c1, r + 1, c2);
      }
    }
  }
}

GTState gt_basis_state(const Setting& setting, std::vector<Rational> base) {
  gt_check_generic(setting, base);
  const int n = gt_rank(setting);
  GTState s;
  s.base = std::move(base);
  s.amplitudes.emplace(std::vector<long>(static_cast<std::size_t>(n * (n - 1) / 2), 0), Rational(1));
  return s;
}

namespace {

// l + m at the non-top rows, l elsewhere.
std::vector<Rational> shifted_point(const GTState& s, const std::vector<long>& m) {
  std::vector<Rational> p = s.base;
  for (std::size_t v = 0; v < m.size(); ++v) p[v] += m[v];
  return p;
}

Rational eval_generic(const RatFunc& f, const std::vector<Rational>& p) {
  try {
    return f.evaluate(p);
  } catch (const Error& e) {
    if (e.code() == Errc::PoleAtPoint) throw Error(Errc::NonGenericTableau, e.what());
    throw;
  }
}

void accumulate(std::map<std::vector<long>, Rational>& acc, std::vector<long> m, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = acc.try_emplace(std::move(m), v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) acc.erase(it);
}

}  // namespace

GTState gt_module_act(const Setting& setting, const GTState& state, int k, int sign) {
  const int n = gt_rank(setting);
  if (k < 1 || k >= n) throw Error(Errc::IndexOutOfRange, "E_" + std::to_string(k));
  gt_check_generic(setting, state.base);
  std::vector<std::pair<VarId, RatFunc>> coeffs;
  for (int i = 1; i <= k; ++i) coeffs.emplace_back(gt_var(setting, k, i), gt_coefficient(setting, k, i, sign));
  GTState out;
  out.base = state.base;
  for (const auto& [m, amp] : state.amplitudes) {
    const auto p = shifted_point(state, m);
    for (const auto& [v, a] : coeffs) {
      auto m2 = m;
      m2[v] += sign;
      accumulate(out.amplitudes, std::move(m2), amp * eval_generic(a, p));
    }
  }
  return out;
}

GTState gt_symbolic_act(const SkewElement& x, const GTState& state) {
  const std::size_t dim = state.amplitudes.empty() ? 0 : state.amplitudes.begin()->first.size();
  GTState out;
  out.base = state.base;
  for (const auto& [s, c] : x.terms()) {
    if (!s.is_pure_shift()) throw Error(Errc::UnsupportedSetting, "tableau action needs pure shifts");
    std::vector<long> v(dim, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Rational& d = s.shift_vector()[i];
      if (d == 0) continue;
      if (i >= dim || d.get_den() != 1) {
        throw Error(Errc::UnsupportedSetting, to_string(s) + " does not move the non-top rows by integers");
      }
      v[i] = d.get_num().get_si();
    }
    for (const auto& [m, amp] : state.amplitudes) {
      auto m2 = m;
      for (std::size_t i = 0; i < dim; ++i) m2[i] += v[i];
      auto p = shifted_point(state, m2);
      for (auto& q : p) q = -q;
      accumulate(out.amplitudes, std::move(m2), amp * eval_generic(c, p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generalized Weyl algebra

GwaPreset build_gwa(const Poly& a, const Rational& q) {
  if (a.is_zero()) throw Error(Errc::InvalidSetting, "gwa needs a != 0");
  if (q == 0) throw Error(Errc::InvalidSetting, "gwa needs q != 0");
  for (VarId v : a.variables()) {
    if (v != 0) throw Error(Errc::UnknownVariable, "gwa polynomial must be in t alone");
  }
  std::vector<Variable> vars{{0, "t", 0, 0}};
  const std::string label = "gwa(" + to_string(a, [](VarId) { return std::string("t"); }) + "," + q.get_str() + ")";
  auto setting = share(Setting(label, std::move(vars), FiniteGroup::trivial(1),
                               ShiftMonoid::lattice({{Rational(-q)}}, 1), {RatFunc(Poly::variable(0))}));
  const AffineAut sigma = AffineAut::shift({Rational(-q)});
  GwaPreset p{setting,
              a,
              q,
              sigma,
              make_invariant(setting, RatFunc(1), sigma),
              make_invariant(setting, RatFunc(a), invert(sigma))};
  fail_on(gwa_relation_checks(p));
  return p;
}

GwaPreset build_gwa(std::string_view a, const Rational& q) {
  const RatFunc f = parse_ratfunc(a, [](std::string_view name) -> std::optional<VarId> {
    if (name == "t") return VarId{0};
    return std::nullopt;
  });
  if (!f.is_polynomial()) throw Error(Errc::InvalidSetting, "gwa needs a polynomial");
  return build_gwa(f.as_poly(), q);
}

std::vector<RelationCheck> gwa_relation_checks(const GwaPreset& p) {
  const auto& s = p.setting;
  const SkewElement& X = p.X.element();
  const SkewElement& Y = p.Y.element();
  const RatFunc a(p.a);
  const RatFunc a_sigma = apply_automorphism(p.sigma, a);
  std::vector<RelationCheck> out;
  out.push_back({"XY = a^sigma", X * Y - SkewElement::scalar(s, a_sigma)});
  out.push_back({"YX = a", Y * X - SkewElement::scalar(s, a)});
  const std::vector<std::pair<std::string, RatFunc>> probes{{"t", RatFunc::variable(0)}, {"a", a}};
  for (const auto& [name, l] : probes) {
    const SkewElement lam = SkewElement::scalar(s, l);
    const SkewElement lam_sigma = SkewElement::scalar(s, apply_automorphism(p.sigma, l));
    out.push_back({"X l = l^sigma X [l=" + name + "]", X * lam - lam_sigma * X});
    out.push_back({"l Y = Y l^sigma [l=" + name + "]", lam * Y - Y * lam_sigma});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Torus

std::string_view flavor_name(TorusFlavor f) {
  switch (f) {
    case TorusFlavor::Plain: return "plain";
    case TorusFlavor::Symmetric: return "symmetric";
    case TorusFlavor::OrthogonalOdd: return "orthogonal-odd";
    case TorusFlavor::OrthogonalEven: return "orthogonal-even";
  }
  return "plain";
}

TorusFlavor parse_flavor(std::string_view name) {
  for (auto f : {TorusFlavor::Plain, TorusFlavor::Symmetric, TorusFlavor::OrthogonalOdd, TorusFlavor::OrthogonalEven}) {
    if (flavor_name(f) == name) return f;
  }
  throw Error(Errc::UnsupportedFlavor, "unknown torus flavor '" + std::string(name) + "'");
}

namespace {

// t_v -> 2 - t_v
AffineAut reflection(std::size_t nvars, std::size_t v) {
  std::vector<VarId> perm(nvars);
  for (std::size_t i = 0; i < nvars; ++i) perm[i] = static_cast<VarId>(i);
  std::vector<Rational> scale(nvars, Rational(1));
  scale[v] = -1;
  return AffineAut(std::move(perm), std::move(scale), unit(nvars, v, Rational(2)));
}

}  // namespace

TorusPreset build_torus(int n, TorusFlavor flavor) {
  if (n < 1) throw Error(Errc::UnsupportedFlavor, "torus needs n >= 1");
  if (flavor == TorusFlavor::OrthogonalEven && n < 2) {
    throw Error(Errc::UnsupportedFlavor, "orthogonal-even needs at least two variables");
  }
  const auto nv = static_cast<std::size_t>(n);
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < nv; ++i) vars.push_back({static_cast<VarId>(i), "t" + std::to_string(i + 1), 0, 0});

  std::vector<AffineAut> gens;
  if (flavor != TorusFlavor::Plain) {
    for (std::size_t i = 0; i + 1 < nv; ++i) gens.push_back(swap_vars(nv, static_cast<VarId>(i), static_cast<VarId>(i + 1)));
  }
  if (flavor == TorusFlavor::OrthogonalOdd) gens.push_back(reflection(nv, 0));
  if (flavor == TorusFlavor::OrthogonalEven) gens.push_back(compose(reflection(nv, 0), reflection(nv, 1)));
  FiniteGroup group = gens.empty() ? FiniteGroup::trivial(nv) : group_closure(gens, nv, 1000000);

  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 0; i < nv; ++i) basis.push_back(unit(nv, i, Rational(-1)));

  std::vector<Poly> t, u2;
  Poly uprod(1);
  for (std::size_t i = 0; i < nv; ++i) {
    t.push_back(Poly::variable(static_cast<VarId>(i)));
    const Poly u = t.back() - Poly(1);
    u2.push_back(u * u);
    uprod *= u;
  }
  std::vector<Poly> gamma_polys;
  switch (flavor) {
    case TorusFlavor::Plain: gamma_polys = t; break;
    case TorusFlavor::Symmetric: gamma_polys = elementary_symmetric(t); break;
    case TorusFlavor::OrthogonalOdd: gamma_polys = elementary_symmetric(u2); break;
    case TorusFlavor::OrthogonalEven:
      gamma_polys = elementary_symmetric(u2);
      gamma_polys.back() = uprod;
      break;
  }
  std::vector<RatFunc> gamma(gamma_polys.begin(), gamma_polys.end());
  const std::string label = "torus(" + std::to_string(n) + "," + std::string(flavor_name(flavor)) + ")";
  auto setting = share(Setting(label, std::move(vars), std::move(group), ShiftMonoid::lattice(std::move(basis), nv), gamma));

  TorusPreset p{setting, flavor, {}, {}, {}};
  const bool orthogonal = flavor == TorusFlavor::OrthogonalOdd || flavor == TorusFlavor::OrthogonalEven;
  for (std::size_t i = 0; i < nv; ++i) {
    const AffineAut sigma = AffineAut::shift(unit(nv, i, Rational(-1)));
    const AffineAut sigma_inv = invert(sigma);
    p.x.push_back(single(setting, RatFunc(1), sigma));
    SkewElement d = single(setting, RatFunc(t[i]), sigma_inv);
    if (orthogonal) {
      d += SkewElement::scalar(setting, RatFunc(1));
      d += single(setting, RatFunc(-1), compose(sigma_inv, sigma_inv));
    }
    p.d.push_back(std::move(d));
  }
  const AffineAut s1 = AffineAut::shift(unit(nv, 0, Rational(-1)));
  p.invariant_gens.push_back(make_invariant(setting, RatFunc(1), s1));
  p.invariant_gens.push_back(make_invariant(setting, RatFunc(t[0]), invert(s1)));
  for (const auto& g : gamma) p.invariant_gens.emplace_back(SkewElement::scalar(setting, g));
  return p;
}

std::vector<RelationCheck> torus_relation_checks(const TorusPreset& p) {
  const auto& s = p.setting;
  const std::size_t n = p.x.size();
  std::vector<RelationCheck> out;
  auto ij = [](std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SkewElement r = commutator(p.d[i], p.x[j]);
      if (i == j) r = r - SkewElement::scalar(s, RatFunc(1));
      out.push_back({"[d,x] weyl" + ij(i, j), r});
      if (i < j) {
        out.push_back({"[x,x]" + ij(i, j), commutator(p.x[i], p.x[j])});
        out.push_back({"[d,d]" + ij(i, j), commutator(p.d[i], p.d[j])});
      }
    }
  }
  for (std::size_t k = 0; k < p.invariant_gens.size(); ++k) {
    const SkewElement& x = p.invariant_gens[k].element();
    SkewElement worst(s);
    for (const auto& g : s->group().generators()) {
      SkewElement r = act_by(g, x) - x;
      if (!r.is_zero()) {
        worst = r;
        break;
      }
    }
    out.push_back({"invariant generator " + std::to_string(k + 1), worst});
  }
  if (p.flavor == TorusFlavor::OrthogonalOdd || p.flavor == TorusFlavor::OrthogonalEven) {
    // The reflection matches the involution x -> x^-1, d -> -x^2 d.
    for (std::size_t i = 0; i < n; ++i) {
      const AffineAut eps = reflection(n, i);
      out.push_back({"involution on x" + std::to_string(i + 1), act_by(eps, p.x[i]) - skew_inverse(p.x[i])});
      out.push_back({"involution on d" + std::to_string(i + 1), act_by(eps, p.d[i]) + p.x[i] * p.x[i] * p.d[i]});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Other settings

SettingPtr build_symmetric(int n) {
  if (n < 1) throw Error(Errc::InvalidSetting, "sym(n) needs n >= 1");
  const auto nv = static_cast<std::size_t>(n);
  std::vector<Variable> vars;
  std::vector<Poly> xs;
  std::vector<AffineAut> gens;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 0; i < nv; ++i) {
    vars.push_back({static_cast<VarId>(i), "x" + std::to_string(i + 1), 0, 0});
    xs.push_back(Poly::variable(static_cast<VarId>(i)));
    basis.push_back(unit(nv, i, Rational(1)));
    if (i + 1 < nv) gens.push_back(swap_vars(nv, static_cast<VarId>(i), static_cast<VarId>(i + 1)));
  }
  FiniteGroup group = gens.empty() ? FiniteGroup::trivial(nv) : group_closure(gens, nv, 1000000);
  auto e = elementary_symmetric(xs);
  return share(Setting("sym(" + std::to_string(n) + ")", std::move(vars), std::move(group),
                       ShiftMonoid::lattice(std::move(basis), nv), std::vector<RatFunc>(e.begin(), e.end())));
}

SettingPtr build_finite() {
  std::vector<Variable> vars{{0, "x", 0, 0}, {1, "y", 0, 0}};
  const AffineAut swap = swap_vars(2, 0, 1);
  const AffineAut neg({0, 1}, {Rational(-1), Rational(-1)}, {Rational(0), Rational(0)});
  const Poly x = Poly::variable(0);
  const Poly y = Poly::variable(1);
  return share(Setting("finite", std::move(vars), group_closure(std::vector<AffineAut>{swap}, 2),
                       ShiftMonoid::generated({neg}, 2), {RatFunc(x + y), RatFunc(x * y)}));
}

AffineAut lift_aut(const AffineAut& a, std::size_t offset, std::size_t nvars) {
  std::vector<VarId> perm(nvars);
  for (std::size_t v = 0; v < nvars; ++v) perm[v] = static_cast<VarId>(v);
  std::vector<Rational> scale(nvars, Rational(1));
  std::vector<Rational> shift(nvars, Rational(0));
  for (std::size_t v = 0; v < a.size(); ++v) {
    perm[offset + v] = static_cast<VarId>(a.perm()[v] + offset);
    scale[offset + v] = a.scale()[v];
    shift[offset + v] = a.shift_vector()[v];
  }
  return AffineAut(std::move(perm), std::move(scale), std::move(shift));
}

RatFunc lift_ratfunc(const RatFunc& f, std::size_t offset, std::size_t nvars) {
  std::vector<Poly> images;
  std::size_t width = 0;
  for (VarId v : f.variables()) width = std::max<std::size_t>(width, v + 1);
  if (offset + width > nvars) throw Error(Errc::SettingMismatch, "lift leaves the variable range");
  for (std::size_t v = 0; v < width; ++v) images.push_back(Poly::variable(static_cast<VarId>(v + offset)));
  return f.substitute_invertible(images);
}

namespace {

SkewElement lift_element(const SkewElement& x, const SettingPtr& from, const SettingPtr& to, std::size_t offset) {
  if (x.setting() != from) throw Error(Errc::SettingMismatch, "element of another setting");
  SkewElement out(to);
  for (const auto& [m, c] : x.terms()) {
    out.add_term(lift_aut(m, offset, to->nvars()), lift_ratfunc(c, offset, to->nvars()));
  }
  return out;
}

// Monoid generators of M: the basis and its inverses for a lattice.
std::vector<AffineAut> monoid_generators(const ShiftMonoid& m) {
  std::vector<AffineAut> out = m.generators();
  if (m.is_lattice()) {
    for (const auto& g : m.generators()) out.push_back(invert(g));
  }
  return out;
}

}  // namespace

SkewElement TensorProduct::lift_left(const SkewElement& x) const { return lift_element(x, left, setting, 0); }
SkewElement TensorProduct::lift_right(const SkewElement& x) const {
  return lift_element(x, right, setting, left->nvars());
}

TensorProduct tensor_product_rings(const SettingPtr& left, const SettingPtr& right) {
  const std::size_t n1 = left->nvars();
  const std::size_t n = n1 + right->nvars();
  bool clash = false;
  for (const auto& v : right->variables()) clash = clash || left->lookup(v.name).has_value();
  std::vector<Variable> vars;
  for (const auto& v : left->variables()) vars.push_back({v.id, clash ? v.name + "_1" : v.name, 0, 0});
  for (const auto& v : right->variables()) {
    vars.push_back({static_cast<VarId>(v.id + n1), clash ? v.name + "_2" : v.name, 0, 0});
  }
  FiniteGroup group = direct_product(left->group(), right->group());
  ShiftMonoid monoid;
  if (left->monoid().is_lattice() && right->monoid().is_lattice()) {
    std::vector<std::vector<Rational>> basis;
    for (const auto& g : left->monoid().generators()) basis.push_back(lift_aut(g, 0, n).shift_vector());
    for (const auto& g : right->monoid().generators()) basis.push_back(lift_aut(g, n1, n).shift_vector());
    monoid = ShiftMonoid::lattice(std::move(basis), n);
  } else {
    std::vector<AffineAut> gens;
    for (const auto& g : monoid_generators(left->monoid())) gens.push_back(lift_aut(g, 0, n));
    for (const auto& g : monoid_generators(right->monoid())) gens.push_back(lift_aut(g, n1, n));
    monoid = ShiftMonoid::generated(std::move(gens), n);
  }
  std::vector<RatFunc> gamma;
  for (const auto& g : left->gamma_gens()) gamma.push_back(lift_ratfunc(g, 0, n));
  for (const auto& g : right->gamma_gens()) gamma.push_back(lift_ratfunc(g, n1, n));
  auto setting = share(Setting("tensor(" + left->label() + "," + right->label() + ")", std::move(vars),
                               std::move(group), std::move(monoid), std::move(gamma)));
  return {setting, left, right};
}

GkBound gk_bound(const Setting& setting) {
  if (!setting.monoid().is_lattice()) {
    throw Error(Errc::UnsupportedSetting, setting.label() + ": growth is only computed for lattice monoids");
  }
  for (const auto& g : setting.gamma_gens()) {
    if (!g.is_polynomial()) throw Error(Errc::UnsupportedSetting, setting.label() + ": Gamma is not polynomial");
  }
  GkBound b;
  b.gkdim_gamma = setting.nvars();
  b.growth = setting.monoid().rank();
  b.sum = b.gkdim_gamma + b.growth;
  return b;
}

// ---------------------------------------------------------------------------
// Preset names

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits "name(a, b)" into name and top-level arguments.
std::pair<std::string_view, std::vector<std::string_view>> split_call(std::string_view spec) {
  spec = trim(spec);
  const auto open = spec.find('(');
  if (open == std::string_view::npos) return {spec, {}};
  if (spec.back() != ')') throw Error(Errc::ParseError, "unbalanced preset name '" + std::string(spec) + "'");
  std::vector<std::string_view> args;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i + 1 < spec.size(); ++i) {
    const char c = spec[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw Error(Errc::ParseError, "unbalanced preset name '" + std::string(spec) + "'");
    if (c == ',' && depth == 0) {
      args.push_back(trim(spec.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(Errc::ParseError, "unbalanced preset name '" + std::string(spec) + "'");
  args.push_back(trim(spec.substr(start, spec.size() - 1 - start)));
  return {trim(spec.substr(0, open)), args};
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

void expect_args(std::string_view name, const std::vector<std::string_view>& args, std::size_t lo, std::size_t hi) {
  if (args.size() < lo || args.size() > hi) {
    throw Error(Errc::ParseError, "wrong number of arguments for preset '" + std::string(name) + "'");
  }
}

}  // namespace

SettingPtr build_preset(std::string_view spec) {
  const auto [name, args] = split_call(spec);
  if (name == "gt") {
    expect_args(name, args, 1, 1);
    return build_gt(parse_int(args[0]));
  }
  if (name == "gwa") {
    expect_args(name, args, 1, 2);
    return build_gwa(args[0], args.size() > 1 ? parse_rational(std::string(args[1])) : Rational(1)).setting;
  }
  if (name == "torus") {
    expect_args(name, args, 1, 2);
    return build_torus(parse_int(args[0]), args.size() > 1 ? parse_flavor(args[1]) : TorusFlavor::Plain).setting;
  }
  if (name == "sym") {
    expect_args(name, args, 1, 1);
    return build_symmetric(parse_int(args[0]));
  }
  if (name == "finite") {
    expect_args(name, args, 0, 0);
    return build_finite();
  }
  if (name == "tensor") {
    expect_args(name, args, 2, 2);
    return tensor_product_rings(build_preset(args[0]), build_preset(args[1])).setting;
  }
  throw Error(Errc::ParseError, "unknown preset '" + std::string(spec) + "'");
}

}  // namespace skewforge
