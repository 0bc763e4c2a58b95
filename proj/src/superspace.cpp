#include "supergrass/superspace.hpp"

#include <algorithm>

namespace sg {

SuperDomain SuperDomain::make(unsigned m, unsigned k, unsigned L, std::vector<std::string> even_names) {
  if (even_names.empty())
    for (unsigned i = 1; i <= m; ++i) even_names.push_back(m == 1 ? "x" : "x" + std::to_string(i));
  if (even_names.size() != m) throw PreconditionError("expected " + std::to_string(m) + " even names");
  SuperDomain d;
  d.m = m;
  d.k = k;
  d.L = L;
  SymbolTable t;
  for (const auto& n : even_names) d.x.push_back(t.add_even(n));
  for (unsigned a = 1; a <= k; ++a) d.theta.push_back(t.add_odd("th" + std::to_string(a)));
  for (unsigned i = 1; i <= L; ++i) d.eta.push_back(t.add_odd("et" + std::to_string(i)));
  d.table = freeze(std::move(t));
  return d;
}

SuperPolynomial berezin(const SuperPolynomial& f, const std::vector<std::uint32_t>& odd) {
  return f.left_cofactor(odd);
}

SuperPolynomial integrate_box(const SuperPolynomial& f, const std::vector<std::uint32_t>& even,
                              const Rational& lo, const Rational& hi) {
  SuperPolynomial out(f.table(), f.ring());
  auto power = [](const Rational& b, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
  };
  for (const auto& [m, c] : f.terms()) {
    Rational w(1);
    Monomial rest;
    rest.odd = m.odd;
    for (const auto& [s, e] : m.even)
      if (std::find(even.begin(), even.end(), s) == even.end()) rest.even.emplace_back(s, e);
    for (auto s : even) {
      const unsigned e = m.exponent(s);
      w *= (power(hi, e + 1) - power(lo, e + 1)) / Rational(e + 1);
    }
    out.add_term(rest, c * Scalar(w));
  }
  return out;
}

SuperPolynomial berezin(const SuperDomain& d, const SuperPolynomial& f) {
  if (d.k == 0) throw PreconditionError("Berezin integral needs at least one odd coordinate");
  SuperPolynomial r = berezin(f, d.theta);
  if (d.box) r = integrate_box(r, d.x, d.box->first, d.box->second);
  return r;
}

bool berezin_translation_check(const SuperDomain& d, const SuperPolynomial& f,
                               const std::vector<SuperPolynomial>& zeta) {
  if (zeta.size() != d.k) throw PreconditionError("shift vector must have one entry per odd coordinate");
  std::map<std::uint32_t, SuperPolynomial> shift;
  for (unsigned a = 0; a < d.k; ++a) {
    if (!zeta[a].is_odd()) throw ParityError("odd shifts must be odd");
    shift[d.theta[a]] = d.th(a + 1) + zeta[a];
  }
  if (berezin(f.substitute(shift), d.theta) != berezin(f, d.theta)) return false;
  for (auto s : d.theta)
    if (!berezin(Derivation::partial(d.table, s)(f), d.theta).is_zero()) return false;
  return true;
}

Supertime supertime() {
  SymbolTable st;
  st.add_even("t");
  st.add_odd("th");
  st.add_odd("et1");
  st.add_odd("et2");
  Supertime s;
  s.table = freeze(std::move(st));
  const auto th = SuperPolynomial::variable(s.table, "th");
  s.dt = Derivation::partial(s.table, "t");
  const auto dth = Derivation::partial(s.table, "th");
  s.D = dth - th * s.dt;
  s.D.set_label("D");
  s.tau = dth + th * s.dt;
  s.tau.set_label("tau");
  return s;
}

EvenGrassmannPoint body_soul(const SuperPolynomial& z) {
  if (!z.is_even()) throw PreconditionError("Grassmann point must be even");
  for (const auto& [m, c] : z.terms())
    if (!m.even.empty()) throw PreconditionError("Grassmann point depends on an even symbol");
  const Scalar b = z.constant_term();
  if (!b.is_real()) throw PreconditionError("body must be real");
  return {b.re(), z - SuperPolynomial::constant(z.table(), b)};
}

SuperPolynomial hinf_extend(const SuperPolynomial& f, const std::vector<std::uint32_t>& vars,
                            const std::vector<SuperPolynomial>& z) {
  if (vars.size() != z.size()) throw PreconditionError("one Grassmann point per variable");
  SuperPolynomial cur = f;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const EvenGrassmannPoint p = body_soul(z[v]);
    const Derivation dv = Derivation::partial(cur.table() ? cur.table() : z[v].table(), vars[v]);
    const SuperPolynomial body = SuperPolynomial::constant(dv.table(), Scalar(p.body));
    SuperPolynomial out(dv.table());
    SuperPolynomial deriv = cur;
    SuperPolynomial soul_pow = SuperPolynomial::constant(dv.table(), Scalar(1));
    Rational fact(1);
    for (unsigned r = 0; !deriv.is_zero() && !soul_pow.is_zero(); ++r) {
      if (r > 0) fact *= r;
      out += deriv.substitute({{vars[v], body}}) * soul_pow * Scalar(Rational(1) / fact);
      deriv = dv(deriv);
      soul_pow = soul_pow * p.soul;
    }
    cur = out;
  }
  return cur;
}

LiftSpace LiftSpace::make(unsigned m, unsigned q) {
  if (q > 9) throw PreconditionError("lift space supports at most 9 flesh variables");
  LiftSpace sp;
  sp.m = m;
  sp.q = q;
  SymbolTable t;
  for (unsigned i = 1; i <= m; ++i) sp.x.push_back(t.add_even(m == 1 ? "x" : "x" + std::to_string(i)));
  for (unsigned i = 1; i <= q; ++i) sp.eta.push_back(t.add_odd("et" + std::to_string(i)));
  for (unsigned len = 2; len <= q; len += 2)
    for (unsigned mask = 0; mask < (1u << q); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != len) continue;
      std::vector<unsigned> I;
      std::string n = "s";
      for (unsigned i = 0; i < q; ++i)
        if (mask & (1u << i)) {
          I.push_back(i + 1);
          n += std::to_string(i + 1);
        }
      sp.sets.push_back(I);
      sp.s.push_back(t.add_even(n));
    }
  sp.table = freeze(std::move(t));
  return sp;
}

SuperPolynomial LiftSpace::eta_monomial(const std::vector<unsigned>& I) const {
  SuperPolynomial r = SuperPolynomial::constant(table, Scalar(1));
  for (auto i : I) r = r * SuperPolynomial::variable(table, eta.at(i - 1));
  return r;
}

std::optional<std::size_t> LiftSpace::set_index(const std::vector<unsigned>& I) const {
  auto it = std::find(sets.begin(), sets.end(), I);
  if (it == sets.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sets.begin());
}

SuperPolynomial theta_lift(const LiftSpace& sp, const SuperPolynomial& f) {
  if (!f.is_even()) throw ParityError("theta_lift needs an even function");
  SuperPolynomial out(sp.table, f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial base;
    base.even = m.even;
    if (m.odd.empty()) {
      out.add_term(base, c);
      continue;
    }
    std::vector<unsigned> I;
    for (auto o : m.odd) {
      auto it = std::find(sp.eta.begin(), sp.eta.end(), o);
      if (it == sp.eta.end()) throw PreconditionError("theta_lift: unexpected odd symbol");
      I.push_back(static_cast<unsigned>(it - sp.eta.begin()) + 1);
    }
    const auto idx = sp.set_index(I);
    out += SuperPolynomial::term(sp.table, c, base) * SuperPolynomial::variable(sp.table, sp.s[*idx]);
  }
  return out;
}

SuperPolynomial theta_lower(const LiftSpace& sp, const SuperPolynomial& F) {
  Derivation vt(sp.table, Parity::Even, "theta");
  for (std::size_t i = 0; i < sp.sets.size(); ++i) vt.set_image(sp.s[i], sp.eta_monomial(sp.sets[i]));
  // e^theta F = sum theta^n F / n!; the series ends once the s-degree is used up.
  SuperPolynomial total = F;
  SuperPolynomial term = F;
  Rational fact(1);
  for (unsigned n = 1; !term.is_zero(); ++n) {
    term = vt(term);
    fact *= n;
    total += term * Scalar(Rational(1) / fact);
  }
  std::map<std::uint32_t, SuperPolynomial> zero;
  for (auto s : sp.s) zero[s] = SuperPolynomial(sp.table);
  return total.substitute(zero);
}

namespace {

// et^{I1} et^{I2} = sign * et^{I1 u I2}; 0 when the sets meet.
int merge_sign(const std::vector<unsigned>& a, const std::vector<unsigned>& b, std::vector<unsigned>& out) {
  out.clear();
  std::vector<std::uint32_t> seq(a.begin(), a.end());
  seq.insert(seq.end(), b.begin(), b.end());
  std::vector<std::uint32_t> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  std::vector<std::uint32_t> perm;
  for (auto v : sorted)
    perm.push_back(static_cast<std::uint32_t>(std::find(seq.begin(), seq.end(), v) - seq.begin()));
  out.assign(sorted.begin(), sorted.end());
  return permutation_sign(perm);
}

}  // namespace

SuperPolynomial reduce_ideal(const LiftSpace& sp, const SuperPolynomial& F, bool reverse) {
  auto s_pos = [&](std::uint32_t sym) -> std::optional<std::size_t> {
    auto it = std::find(sp.s.begin(), sp.s.end(), sym);
    if (it == sp.s.end()) return std::nullopt;
    return static_cast<std::size_t>(it - sp.s.begin());
  };
  SuperPolynomial cur = F;
  for (;;) {
    SuperPolynomial next(sp.table, cur.ring());
    bool changed = false;
    for (const auto& [m, c] : cur.terms()) {
      // Expand the s-part into a list of factors.
      std::vector<std::size_t> factors;
      Monomial rest;
      rest.odd = m.odd;
      for (const auto& [s, e] : m.even) {
        if (auto p = s_pos(s))
          for (unsigned i = 0; i < e; ++i) factors.push_back(*p);
        else
          rest.even.emplace_back(s, e);
      }
      if (factors.size() < 2) {
        next.add_term(m, c);
        continue;
      }
      changed = true;
      if (reverse) std::reverse(factors.begin(), factors.end());
      std::vector<unsigned> merged;
      int sign = reverse ? merge_sign(sp.sets[factors[1]], sp.sets[factors[0]], merged)
                         : merge_sign(sp.sets[factors[0]], sp.sets[factors[1]], merged);
      if (sign == 0) continue;
      SuperPolynomial t = SuperPolynomial::term(sp.table, sign > 0 ? c : -c, rest) *
                          SuperPolynomial::variable(sp.table, sp.s[*sp.set_index(merged)]);
      for (std::size_t i = 2; i < factors.size(); ++i) t = t * SuperPolynomial::variable(sp.table, sp.s[factors[i]]);
      next += t;
    }
    cur = next;
    if (!changed) return cur;
  }
}

Derivation lift_eta_rotation(const LiftSpace& sp) {
  if (sp.q < 2) throw PreconditionError("needs at least two flesh variables");
  // Z = et1 d/det2 on et^I, read off to get the image of s^I.
  const Derivation Z = SuperPolynomial::variable(sp.table, sp.eta[0]) * Derivation::partial(sp.table, sp.eta[1]);
  Derivation lifted(sp.table, Parity::Even, "Z");
  for (std::size_t i = 0; i < sp.sets.size(); ++i) {
    const auto& I = sp.sets[i];
    if (std::find(I.begin(), I.end(), 2u) == I.end() || std::find(I.begin(), I.end(), 1u) != I.end()) continue;
    const SuperPolynomial img = Z(sp.eta_monomial(I));
    // img = sign * et^{J} with J = I minus 2 plus 1.
    std::vector<unsigned> J;
    for (auto v : I) J.push_back(v == 2 ? 1 : v);
    std::sort(J.begin(), J.end());
    const Scalar sign = img.coefficient(img.terms().begin()->first);
    lifted.set_image(sp.s[i], sign * SuperPolynomial::variable(sp.table, sp.s[*sp.set_index(J)]));
  }
  return lifted;
}

CheckOutcome lift_vector_field_check(const LiftSpace& sp, unsigned which, const SuperPolynomial& F) {
  if (sp.m < 1) throw PreconditionError("needs an even coordinate");
  if (which > 1 && sp.q < 2) throw PreconditionError("needs at least two flesh variables");
  const Derivation dx = Derivation::partial(sp.table, sp.x[0]);
  Derivation X, XX;
  switch (which) {
    case 1:
      X = XX = dx;
      break;
    case 2:
      X = sp.eta_monomial({1, 2}) * dx;
      XX = SuperPolynomial::variable(sp.table, sp.s[*sp.set_index({1, 2})]) * dx;
      break;
    case 3:
      X = SuperPolynomial::variable(sp.table, sp.eta[0]) * Derivation::partial(sp.table, sp.eta[1]);
      XX = lift_eta_rotation(sp);
      break;
    default:
      throw PreconditionError("vector field case must be 1, 2 or 3");
  }
  const auto lhs = X(theta_lower(sp, F));
  const auto rhs = theta_lower(sp, XX(F));
  if (lhs == rhs) return {};
  return CheckOutcome::fail("F = " + F.str() + ": " + lhs.str() + " != " + rhs.str());
}

}  // namespace sg
