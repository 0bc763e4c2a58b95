#include "supergrass/models.hpp"

#include <functional>

#include "supergrass/superspace.hpp"

namespace sg {

namespace {

void enumerate_counts(std::size_t dims, unsigned max, std::vector<std::vector<std::uint32_t>>& out) {
  // Grouped by total order, then lexicographically.
  for (unsigned order = 0; order <= max; ++order) {
    std::vector<std::uint32_t> c(dims, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == dims) {
        c[i] = left;
        out.push_back(c);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        c[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (dims == 0) {
      if (order == 0) out.push_back(c);
    } else {
      rec(0, order);
    }
  }
}

unsigned total_order(const std::vector<std::uint32_t>& c) {
  unsigned n = 0;
  for (auto k : c) n += k;
  return n;
}

bool check_eq(CheckOutcome& out, const std::string& what, const SuperPolynomial& got, const SuperPolynomial& want) {
  if (!out.ok) return false;
  if (got != want) out = CheckOutcome::fail(what + ": got " + got.str() + ", expected " + want.str());
  return out.ok;
}

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

/// p with sym^2 replaced by `square` until sym has degree <= 1.
SuperPolynomial reduce_square(const SuperPolynomial& p, std::uint32_t sym, const SuperPolynomial& square) {
  SuperPolynomial out(p.table(), p.ring());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m.exponent(sym);
    if (e < 2) {
      out.add_term(m, c);
      continue;
    }
    Monomial r = m;
    for (auto it = r.even.begin(); it != r.even.end(); ++it)
      if (it->first == sym) {
        if (e % 2)
          it->second = 1;
        else
          r.even.erase(it);
        break;
      }
    out += SuperPolynomial::term(p.table(), c, r) * square.pow(e / 2);
  }
  return out;
}

}  // namespace

// JetSpace -----------------------------------------------------------------------

JetSpace JetSpace::make(const Layout& layout) {
  JetSpace js;
  js.layout_ = layout;
  SymbolTable st;
  for (const auto& c : layout.coords) st.add_even(c);
  for (const auto& c : layout.odd_coords) st.add_odd(c);
  for (const auto& c : layout.even_params) st.add_even(c);
  for (const auto& c : layout.odd_params) st.add_odd(c);
  std::vector<std::vector<std::uint32_t>> counts;
  enumerate_counts(layout.coords.size(), layout.order, counts);
  for (const auto& f : layout.fields)
    for (const auto& c : counts) js.jets_[f.name][c] = st.add_jet(f.name, f.parity, layout.coords, c);
  js.table_ = freeze(std::move(st));

  for (std::size_t mu = 0; mu < layout.coords.size(); ++mu) {
    const auto& name = layout.coords[mu];
    Derivation d(js.table_, Parity::Even, "D_" + name);
    d.set_image(js.table_->index(name), js.constant(Scalar(1)));
    for (const auto& [field, by_counts] : js.jets_)
      for (const auto& [c, sym] : by_counts) {
        if (total_order(c) == layout.order) {
          d.mark_undefined(sym);
          continue;
        }
        auto up = c;
        ++up[mu];
        d.set_image(sym, SuperPolynomial::variable(js.table_, by_counts.at(up)));
      }
    js.totals_.emplace(name, std::move(d));
  }
  return js;
}

std::uint32_t JetSpace::jet_symbol(const std::string& field, const std::vector<std::uint32_t>& counts) const {
  const auto f = jets_.find(field);
  if (f == jets_.end()) throw Error("unknown field '" + field + "'");
  const auto j = f->second.find(counts);
  if (j == f->second.end()) throw UnsupportedError("jet of '" + field + "' beyond the truncation order");
  return j->second;
}

SuperPolynomial JetSpace::jet(const std::string& field, const std::string& letters) const {
  std::vector<std::uint32_t> counts(layout_.coords.size(), 0);
  for (char ch : letters) {
    bool found = false;
    for (std::size_t mu = 0; mu < layout_.coords.size(); ++mu)
      if (layout_.coords[mu] == std::string(1, ch)) {
        ++counts[mu];
        found = true;
      }
    if (!found) throw Error(std::string("unknown coordinate letter '") + ch + "'");
  }
  return SuperPolynomial::variable(table_, jet_symbol(field, counts));
}

const Derivation& JetSpace::total(const std::string& coord) const {
  const auto it = totals_.find(coord);
  if (it == totals_.end()) throw Error("unknown coordinate '" + coord + "'");
  return it->second;
}

SuperPolynomial JetSpace::apply_total(SuperPolynomial f, const std::vector<std::uint32_t>& counts) const {
  for (std::size_t mu = 0; mu < counts.size(); ++mu) f = apply_power(total(layout_.coords[mu]), f, counts[mu]);
  return f;
}

SuperPolynomial JetSpace::euler(const SuperPolynomial& L, const std::string& field) const {
  SuperPolynomial out = zero();
  const auto f = jets_.find(field);
  if (f == jets_.end()) throw Error("unknown field '" + field + "'");
  for (const auto& [c, sym] : f->second) {
    const auto d = Derivation::partial(table_, sym)(L);
    if (d.is_zero()) continue;
    const auto term = apply_total(d, c);
    if (total_order(c) % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

SuperPolynomial JetSpace::integrate_by_parts(const SuperPolynomial& L, const std::string& field) const {
  const auto f = jets_.find(field);
  if (f == jets_.end()) throw Error("unknown field '" + field + "'");
  std::vector<std::uint32_t> syms;
  for (const auto& [c, sym] : f->second) syms.push_back(sym);
  const auto chi = SuperPolynomial::variable(table_, f->second.begin()->second);
  SuperPolynomial out = L.without(syms);
  for (const auto& [c, sym] : f->second) {
    const auto g = Derivation::partial(table_, sym)(L);
    if (g.is_zero()) continue;
    for (auto s : syms)
      if (g.depends_on(s)) throw PreconditionError("integration by parts needs an expression linear in " + field);
    const auto moved = chi * apply_total(g, c);
    if (total_order(c) % 2)
      out -= moved;
    else
      out += moved;
  }
  return out;
}

// Superpotential ------------------------------------------------------------------

SuperPolynomial Superpotential::operator()(const SuperPolynomial& u) const {
  SuperPolynomial out;
  SuperPolynomial power = SuperPolynomial::constant(u.table(), Scalar(1));
  for (std::size_t n = 0; n < c.size(); ++n) {
    out += c[n] * power;
    if (n + 1 < c.size()) power = power * u;
  }
  return out;
}

Superpotential Superpotential::derivative() const {
  Superpotential d;
  for (std::size_t n = 1; n < c.size(); ++n) d.c.push_back(Scalar(static_cast<long>(n)) * c[n]);
  return d;
}

// Superparticle -------------------------------------------------------------------

Superparticle Superparticle::make(unsigned n) {
  if (n == 0) throw PreconditionError("superparticle needs a target dimension >= 1");
  JetSpace::Layout l;
  l.coords = {"t"};
  l.odd_coords = {"th"};
  l.odd_params = {"et", "et1", "et2"};
  for (unsigned i = 1; i <= n; ++i) l.fields.push_back({"x" + std::to_string(i), Parity::Even});
  for (unsigned i = 1; i <= n; ++i) l.fields.push_back({"psi" + std::to_string(i), Parity::Odd});
  l.fields.push_back({"chi", Parity::Even});
  l.order = 3;
  Superparticle p;
  p.js_ = JetSpace::make(l);
  p.n_ = n;
  const auto th = p.js_.var("th");
  const auto dth = Derivation::partial(p.js_.table(), "th");
  p.D_ = dth - th * p.js_.total("t");
  p.tau_ = dth + th * p.js_.total("t");
  return p;
}

SuperPolynomial Superparticle::x(unsigned i, const std::string& d) const { return js_.jet("x" + std::to_string(i), d); }

SuperPolynomial Superparticle::psi(unsigned i, const std::string& d) const {
  return js_.jet("psi" + std::to_string(i), d);
}

std::vector<SuperPolynomial> Superparticle::superfield() const {
  std::vector<SuperPolynomial> phi;
  for (unsigned i = 1; i <= n_; ++i) phi.push_back(x(i) + js_.var("th") * psi(i));
  return phi;
}

SuperPolynomial Superparticle::density(const std::vector<SuperPolynomial>& phi) const {
  SuperPolynomial out = js_.zero();
  for (const auto& c : phi) out += D_(c) * js_.total("t")(c);
  return q(-1, 2) * out;
}

SuperPolynomial Superparticle::lagrangian(const std::vector<SuperPolynomial>& phi) const {
  return berezin(density(phi), {js_.table()->index("th")});
}

SuperPolynomial Superparticle::charge() const {
  SuperPolynomial out = js_.zero();
  for (unsigned i = 1; i <= n_; ++i) out += psi(i) * x(i, "t");
  return out;
}

CheckOutcome superparticle_expansion_check(unsigned n) {
  const auto p = Superparticle::make(n);
  const auto& js = p.jets();
  const auto th = js.var("th");
  SuperPolynomial kin = js.zero(), fermi = js.zero();
  for (unsigned i = 1; i <= n; ++i) {
    kin += p.x(i, "t") * p.x(i, "t");
    fermi += p.psi(i) * p.psi(i, "t");
  }
  CheckOutcome out;
  check_eq(out, "-1/2 <D Phi, Phi_t>", p.density(p.superfield()),
           q(-1, 2) * p.charge() + q(1, 2) * th * (kin + fermi));
  check_eq(out, "Berezin integral", p.lagrangian(p.superfield()), q(1, 2) * (kin + fermi));
  std::map<std::uint32_t, SuperPolynomial> no_psi;
  for (unsigned i = 1; i <= n; ++i) no_psi[js.jet_symbol("psi" + std::to_string(i), {0})] = js.zero();
  check_eq(out, "psi = 0 limit", p.lagrangian(p.superfield()).substitute(no_psi), q(1, 2) * kin);
  return out;
}

CheckOutcome plain_variation_check(unsigned n) {
  const auto p = Superparticle::make(n);
  const auto& js = p.jets();
  const auto et = js.var("et");
  const auto phi = p.superfield();
  std::vector<SuperPolynomial> moved;
  for (const auto& c : phi) moved.push_back(c - et * p.tau()(c));
  CheckOutcome out;
  check_eq(out, "L[Phi] - L[Phi - et tau Phi]", p.lagrangian(phi) - p.lagrangian(moved),
           q(1, 2) * et * js.total("t")(p.charge()));
  return out;
}

ModulatedVariation modulated_variation(unsigned n) {
  const auto p = Superparticle::make(n);
  const auto& js = p.jets();
  const auto et = js.var("et");
  const auto chi = js.jet("chi"), chi_t = js.jet("chi", "t");
  const auto& dt = js.total("t");
  const auto phi = p.superfield();
  std::vector<SuperPolynomial> moved;
  for (const auto& c : phi) moved.push_back(c - chi * et * p.tau()(c));
  const auto diff = p.lagrangian(phi) - p.lagrangian(moved);

  ModulatedVariation mv;
  const auto& tab = js.table();
  mv.delta0 = chi * Derivation::partial(tab, js.jet_symbol("chi", {0}))(diff);
  mv.delta1 = chi_t * Derivation::partial(tab, js.jet_symbol("chi", {1}))(diff);
  mv.total = js.integrate_by_parts(diff, "chi");

  SuperPolynomial bracket = js.zero();
  for (const auto& c : phi) {
    const auto v = et * p.tau()(c);
    bracket += p.D()(chi) * v * dt(c) + chi_t * p.D()(c) * v;
  }
  mv.intermediate = q(1, 2) * berezin(bracket, {tab->index("th")});
  mv.intermediate_agrees = mv.intermediate == mv.delta1;

  const auto Q = p.charge();
  auto& out = mv.outcome;
  check_eq(out, "variation splits into chi and chi_t parts", mv.delta0 + mv.delta1, diff);
  check_eq(out, "delta0", mv.delta0, q(1, 2) * et * chi * dt(Q));
  check_eq(out, "delta1", mv.delta1, q(3, 2) * et * chi_t * Q);
  check_eq(out, "variation after integration by parts", mv.total, -(et * chi * dt(Q)));
  return mv;
}

CheckOutcome susy_algebra_check(unsigned n) {
  const auto p = Superparticle::make(n);
  const auto& js = p.jets();
  const auto& dt = js.total("t");
  using Pair = std::pair<SuperPolynomial, SuperPolynomial>;
  auto Qi = [&](const SuperPolynomial& e, const Pair& f) -> Pair { return {-(e * f.second), e * dt(f.first)}; };
  const auto e1 = js.var("et1"), e2 = js.var("et2");
  const auto th = js.var("th");
  CheckOutcome out;
  for (unsigned i = 1; i <= n; ++i) {
    const Pair f{p.x(i), p.psi(i)};
    // Q_i agrees with the components of -et tau Phi.
    const auto var = -(e1 * p.tau()(p.x(i) + th * p.psi(i)));
    const auto q1 = Qi(e1, f);
    check_eq(out, "Q body", var.without({js.table()->index("th")}), q1.first);
    check_eq(out, "Q th-component", berezin(var, {js.table()->index("th")}), q1.second);
    const auto a = Qi(e1, Qi(e2, f)), b = Qi(e2, Qi(e1, f));
    check_eq(out, "[Q1,Q2] x", a.first - b.first, Scalar(-2) * e1 * e2 * p.x(i, "t"));
    check_eq(out, "[Q1,Q2] psi", a.second - b.second, Scalar(-2) * e1 * e2 * p.psi(i, "t"));
  }
  return out;
}

CheckOutcome superparticle_el_check(unsigned n) {
  const auto p = Superparticle::make(n);
  const auto& js = p.jets();
  const auto L = p.lagrangian(p.superfield());
  CheckOutcome out;
  std::map<std::uint32_t, SuperPolynomial> on_shell;
  for (unsigned i = 1; i <= n; ++i) {
    const auto xi = "x" + std::to_string(i), pi = "psi" + std::to_string(i);
    check_eq(out, "E_" + xi, js.euler(L, xi), -p.x(i, "tt"));
    check_eq(out, "E_" + pi, js.euler(L, pi), p.psi(i, "t"));
    on_shell[js.jet_symbol(xi, {2})] = js.zero();
    on_shell[js.jet_symbol(pi, {1})] = js.zero();
  }
  check_eq(out, "d/dt <psi, xdot> on shell", js.total("t")(p.charge()).substitute(on_shell), js.zero());
  return out;
}

// Sigma model ----------------------------------------------------------------------

SigmaModel SigmaModel::make() {
  JetSpace::Layout l;
  l.coords = {"t", "x", "y"};
  l.odd_coords = {"th1", "th2"};
  l.even_params = {"a0", "a1", "a2", "a3", "a4", "c", "s"};
  l.fields = {{"phi", Parity::Even}, {"psi1", Parity::Odd}, {"psi2", Parity::Odd}, {"F", Parity::Even}};
  l.order = 2;
  SigmaModel m;
  m.js_ = JetSpace::make(l);
  return m;
}

Superpotential SigmaModel::symbolic_h(unsigned degree) const {
  if (degree > 4) throw UnsupportedError("symbolic superpotentials have degree <= 4");
  Superpotential h;
  for (unsigned n = 0; n <= degree; ++n) h.c.push_back(js_.var("a" + std::to_string(n)));
  return h;
}

Superpotential SigmaModel::rational_h(const std::vector<Rational>& coeffs) const {
  Superpotential h;
  for (const auto& r : coeffs) h.c.push_back(js_.constant(Scalar(r)));
  return h;
}

SuperPolynomial SigmaModel::superfield() const {
  const auto th1 = js_.var("th1"), th2 = js_.var("th2");
  return js_.jet("phi") + th1 * js_.jet("psi1") + th2 * js_.jet("psi2") + th1 * th2 * js_.jet("F");
}

Derivation SigmaModel::d(unsigned a, unsigned b) const {
  if (a < 1 || a > 2 || b < 1 || b > 2) throw PreconditionError("spinor indices are 1 or 2");
  if (a != b) return js_.total("y");
  return a == 1 ? js_.total("t") + js_.total("x") : js_.total("t") - js_.total("x");
}

Derivation SigmaModel::Dop(unsigned a) const {
  auto D = Derivation::partial(js_.table(), "th" + std::to_string(a));
  for (unsigned b = 1; b <= 2; ++b) D -= js_.var("th" + std::to_string(b)) * d(a, b);
  return D;
}

Derivation SigmaModel::tau(unsigned a) const {
  auto T = Derivation::partial(js_.table(), "th" + std::to_string(a));
  for (unsigned b = 1; b <= 2; ++b) T += js_.var("th" + std::to_string(b)) * d(a, b);
  return T;
}

SuperPolynomial SigmaModel::dirac(unsigned a) const {
  const auto p1 = js_.jet("psi1"), p2 = js_.jet("psi2");
  if (a == 1) return d(1, 2)(p1) - d(1, 1)(p2);
  if (a == 2) return d(2, 2)(p1) - d(1, 2)(p2);
  throw PreconditionError("spinor indices are 1 or 2");
}

SuperPolynomial SigmaModel::psi_dirac_psi() const {
  return js_.jet("psi1") * dirac(2) - js_.jet("psi2") * dirac(1);
}

SuperPolynomial SigmaModel::component_lagrangian(const Superpotential& h) const {
  const auto phi = js_.jet("phi"), F = js_.jet("F");
  const auto pt = js_.jet("phi", "t"), px = js_.jet("phi", "x"), py = js_.jet("phi", "y");
  const auto h1 = h.derivative(), h2 = h1.derivative();
  return q(1, 2) * (pt * pt - px * px - py * py + psi_dirac_psi() + F * F) -
         h2(phi) * js_.jet("psi1") * js_.jet("psi2") + h1(phi) * F;
}

SuperPolynomial SigmaModel::superspace_density(const Superpotential& h) const {
  const auto P = superfield();
  const auto d1 = Dop(1)(P), d2 = Dop(2)(P);
  return q(1, 4) * (d1 * d2 - d2 * d1) + h(P);
}

CheckOutcome sigma_expansion_check() {
  const auto m = SigmaModel::make();
  const auto& js = m.jets();
  const auto th1 = js.var("th1"), th2 = js.var("th2");
  const auto phi = js.jet("phi"), F = js.jet("F");
  const auto P = m.superfield();
  CheckOutcome out;
  check_eq(out, "D_1 Phi", m.Dop(1)(P),
           js.jet("psi1") - th1 * m.d(1, 1)(phi) + th2 * (F - m.d(2, 1)(phi)) + th1 * th2 * m.dirac(1));
  check_eq(out, "D_2 Phi", m.Dop(2)(P),
           js.jet("psi2") - th1 * (F + m.d(1, 2)(phi)) - th2 * m.d(2, 2)(phi) + th1 * th2 * m.dirac(2));
  // {D_a, D_b} = -2 d_ab on the superfield.
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b)
      check_eq(out, "{D_" + std::to_string(a) + ", D_" + std::to_string(b) + "} Phi",
               m.Dop(a)(m.Dop(b)(P)) + m.Dop(b)(m.Dop(a)(P)), Scalar(-2) * m.d(a, b)(P));
  return out;
}

CheckOutcome sigma_action_check(const SigmaModel& m, const Superpotential& h) {
  const auto& js = m.jets();
  const auto& tab = js.table();
  const std::vector<std::uint32_t> thth = {tab->index("th1"), tab->index("th2")};
  const auto th1 = js.var("th1"), th2 = js.var("th2");
  const auto phi = js.jet("phi"), F = js.jet("F"), p1 = js.jet("psi1"), p2 = js.jet("psi2");
  const auto h1 = h.derivative(), h2 = h1.derivative();
  const auto P = m.superfield();
  const auto d1 = m.Dop(1)(P), d2 = m.Dop(2)(P);
  CheckOutcome out;
  const auto half_box = q(1, 2) * m.d(1, 1)(phi) * m.d(2, 2)(phi) - q(1, 2) * m.d(1, 2)(phi) * m.d(1, 2)(phi);
  check_eq(out, "kinetic Berezin integral", berezin(q(1, 4) * (d1 * d2 - d2 * d1), thth),
           half_box + q(1, 2) * m.psi_dirac_psi() + q(1, 2) * F * F);
  const auto pt = js.jet("phi", "t"), px = js.jet("phi", "x"), py = js.jet("phi", "y");
  check_eq(out, "d11 phi d22 phi - (d12 phi)^2", Scalar(2) * half_box, pt * pt - px * px - py * py);
  check_eq(out, "Phi^*h", h(P), h(phi) + h1(phi) * (th1 * p1 + th2 * p2 + th1 * th2 * F) - h2(phi) * th1 * th2 * p1 * p2);
  check_eq(out, "Berezin integral of Phi^*h", berezin(h(P), thth), h1(phi) * F - h2(phi) * p1 * p2);
  const auto L = m.component_lagrangian(h);
  check_eq(out, "component action", berezin(m.superspace_density(h), thth), L);
  const auto hp = h1(phi);
  check_eq(out, "completed square", L,
           q(1, 2) * (pt * pt - px * px - py * py + m.psi_dirac_psi() - Scalar(2) * h2(phi) * p1 * p2 - hp * hp) +
               q(1, 2) * (F + hp) * (F + hp));
  return out;
}

SigmaEL sigma_euler_lagrange(const SigmaModel& m, const Superpotential& h) {
  const auto& js = m.jets();
  const auto L = m.component_lagrangian(h);
  return {js.euler(L, "phi"), js.euler(L, "psi1"), js.euler(L, "psi2"), js.euler(L, "F")};
}

CheckOutcome sigma_el_check(const SigmaModel& m, const Superpotential& h) {
  const auto& js = m.jets();
  const auto phi = js.jet("phi"), F = js.jet("F"), p1 = js.jet("psi1"), p2 = js.jet("psi2");
  const auto h1 = h.derivative(), h2 = h1.derivative(), h3 = h2.derivative();
  const auto box = js.jet("phi", "tt") - js.jet("phi", "xx") - js.jet("phi", "yy");
  const auto el = sigma_euler_lagrange(m, h);
  CheckOutcome out;
  check_eq(out, "E_F", el.e_F, F + h1(phi));
  check_eq(out, "E_phi", el.e_phi, -box - h3(phi) * p1 * p2 + h2(phi) * F);
  const std::map<std::uint32_t, SuperPolynomial> aux = {{js.jet_symbol("F", {0, 0, 0}), -h1(phi)}};
  check_eq(out, "E_phi with F = -h'", el.e_phi.substitute(aux), -(box + h2(phi) * h1(phi) + h3(phi) * p1 * p2));
  check_eq(out, "E_psi1", el.e_psi1, m.dirac(2) - h2(phi) * p2);
  check_eq(out, "E_psi2", el.e_psi2, -(m.dirac(1) - h2(phi) * p1));
  return out;
}

SuperPolynomial trig_reduce(const SuperPolynomial& p, std::uint32_t c, std::uint32_t s) {
  const auto cc = SuperPolynomial::variable(p.table(), c);
  return reduce_square(p, s, SuperPolynomial::constant(p.table(), Scalar(1)) - cc * cc);
}

CheckOutcome bps_check(const SigmaModel& m, const Superpotential& h) {
  const auto& js = m.jets();
  const auto& tab = js.table();
  const auto cs = tab->index("c"), ss = tab->index("s");
  const auto th1s = tab->index("th1"), th2s = tab->index("th2");
  const auto c = js.var("c"), s = js.var("s");
  const auto phi = js.jet("phi"), F = js.jet("F");
  const auto pt = js.jet("phi", "t"), px = js.jet("phi", "x"), py = js.jet("phi", "y");
  const auto h1 = h.derivative(), h2 = h1.derivative();
  auto red = [&](const SuperPolynomial& p) { return trig_reduce(p, cs, ss); };
  CheckOutcome out;

  // psi = 0
  const auto P = phi + js.var("th1") * js.var("th2") * F;
  const auto W = c * m.tau(1)(P) + s * m.tau(2)(P);
  const auto A = berezin(W, {th1s}).without({th2s}), B = berezin(W, {th2s}).without({th1s});
  check_eq(out, "(c tau1 + s tau2) Phi has only th-linear terms",
           W - js.var("th1") * A - js.var("th2") * B, js.zero());
  check_eq(out, "th1 component", A, c * (pt + px) + s * (py - F));
  check_eq(out, "th2 component", B, s * (pt - px) + c * (py + F));

  // cos 2a, sin 2a
  const auto C2 = red(c * c - s * s), S2 = Scalar(2) * c * s;
  const auto X = C2 * js.total("x") + S2 * js.total("y");
  const auto Y = -(S2 * js.total("x")) + C2 * js.total("y");
  const auto R1 = red(c * A + s * B);
  check_eq(out, "first-order equation phi_t + X phi", R1, pt + X(phi));
  const std::map<std::uint32_t, SuperPolynomial> aux = {{js.jet_symbol("F", {0, 0, 0}), -h1(phi)}};
  const auto R2 = red(c * B - s * A).substitute(aux);
  check_eq(out, "first-order equation Y phi - h'", R2, Y(phi) - h1(phi));

  const auto first = red(js.total("t")(R1) - X(R1));
  check_eq(out, "second-order consequence of phi_t + X phi = 0", first,
           red(js.jet("phi", "tt") - C2 * C2 * js.jet("phi", "xx") - Scalar(2) * C2 * S2 * js.jet("phi", "xy") -
               S2 * S2 * js.jet("phi", "yy")));
  const auto second = red(Y(R2) + h2(phi) * R2);
  check_eq(out, "second-order consequence of Y phi = h'", second,
           red(S2 * S2 * js.jet("phi", "xx") - Scalar(2) * C2 * S2 * js.jet("phi", "xy") +
               C2 * C2 * js.jet("phi", "yy") - h2(phi) * h1(phi)));
  const auto box = js.jet("phi", "tt") - js.jet("phi", "xx") - js.jet("phi", "yy");
  check_eq(out, "box phi + h'' h' = (D_t - X) R1 - (Y + h'') R2", red(first - second), box + h2(phi) * h1(phi));
  // On BPS solutions the field equation holds.
  const auto el = sigma_euler_lagrange(m, h);
  const std::map<std::uint32_t, SuperPolynomial> bosonic = {{js.jet_symbol("F", {0, 0, 0}), -h1(phi)},
                                                           {js.jet_symbol("psi1", {0, 0, 0}), js.zero()},
                                                           {js.jet_symbol("psi2", {0, 0, 0}), js.zero()}};
  check_eq(out, "E_phi on the bosonic sector", el.e_phi.substitute(bosonic), -red(first - second));

  // alpha = pi/4: c = s, c^2 = 1/2.
  auto quarter = [&](const SuperPolynomial& p) {
    return reduce_square(p.substitute({{ss, c}}), cs, js.constant(q(1, 2)));
  };
  check_eq(out, "alpha = pi/4: R1", quarter(R1), pt + py);
  check_eq(out, "alpha = pi/4: R2", quarter(R2), -px - h1(phi));
  return out;
}

CheckOutcome bogomolnyi_check(const SigmaModel& m, const Superpotential& h) {
  const auto& js = m.jets();
  const auto phi = js.jet("phi");
  const auto pt = js.jet("phi", "t"), px = js.jet("phi", "x");
  const auto hp = h.derivative()(phi);
  const auto lhs = q(1, 2) * (pt * pt + px * px + hp * hp);
  const auto boundary = js.total("x")(h(phi));
  CheckOutcome out;
  for (long sign : {1L, -1L}) {
    const Scalar sgn(sign);
    const auto sq = px - sgn * hp;
    check_eq(out, sign > 0 ? "Bogomolnyi (-)" : "Bogomolnyi (+)", lhs,
             q(1, 2) * (pt * pt + sq * sq + Scalar(2) * sgn * boundary));
  }
  return out;
}

}  // namespace sg
