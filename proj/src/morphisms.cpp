#include "supergrass/morphisms.hpp"

#include <algorithm>

namespace sg {

MorphismSpace MorphismSpace::make(unsigned m, unsigned k, unsigned L, unsigned n, unsigned l) {
  MorphismSpace sp;
  sp.m = m;
  sp.k = k;
  sp.L = L;
  sp.n = n;
  sp.l = l;
  SymbolTable t;
  for (unsigned i = 1; i <= m; ++i) sp.x.push_back(t.add_even(m == 1 ? "x" : "x" + std::to_string(i)));
  for (unsigned i = 1; i <= n; ++i) sp.y.push_back(t.add_even(n == 1 ? "y" : "y" + std::to_string(i)));
  for (unsigned i = 1; i <= k; ++i) sp.theta.push_back(t.add_odd("th" + std::to_string(i)));
  for (unsigned i = 1; i <= L; ++i) sp.eta.push_back(t.add_odd("et" + std::to_string(i)));
  for (unsigned i = 1; i <= l; ++i) sp.psi.push_back(t.add_odd("ps" + std::to_string(i)));
  sp.table = freeze(std::move(t));
  return sp;
}

std::vector<std::uint32_t> MorphismSpace::odd_source() const {
  std::vector<std::uint32_t> r = theta;
  r.insert(r.end(), eta.begin(), eta.end());
  return r;
}

SuperPolynomial MorphismSpace::odd_monomial(const std::vector<unsigned>& I) const {
  const auto src = odd_source();
  SuperPolynomial r = SuperPolynomial::constant(table, Scalar(1));
  for (auto i : I) r = r * var(src.at(i - 1));
  return r;
}

Derivation FleshMorphism::Xi() const {
  Derivation X(space.table, Parity::Even, "Xi");
  for (auto y : space.y) {
    SuperPolynomial img(space.table);
    for (const auto& [I, v] : xi) img += space.odd_monomial(I) * v.image(y);
    X.set_image(y, img);
  }
  return X;
}

SuperPolynomial FleshMorphism::exp_xi(const SuperPolynomial& f) const {
  const Derivation X = Xi();
  SuperPolynomial total = f, term = f;
  Rational fact(1);
  for (unsigned n = 1; !term.is_zero(); ++n) {
    term = X(term);
    fact *= n;
    total += term * Scalar(Rational(1) / fact);
  }
  return total;
}

unsigned FleshMorphism::series_length(const SuperPolynomial& f) const {
  const Derivation X = Xi();
  unsigned n = 0;
  for (SuperPolynomial term = X(f); !term.is_zero(); term = X(term)) ++n;
  return n;
}

SuperPolynomial FleshMorphism::pullback(const SuperPolynomial& f) const {
  std::map<std::uint32_t, SuperPolynomial> sub;
  for (std::size_t i = 0; i < space.y.size(); ++i) sub[space.y[i]] = phi.at(i);
  for (std::size_t j = 0; j < space.psi.size(); ++j) sub[space.psi[j]] = chi.at(j);
  return exp_xi(f.retable(space.table)).substitute(sub);
}

FleshMorphism trivial_morphism(const MorphismSpace& sp) {
  if (sp.m != sp.n) throw PreconditionError("identity morphism needs m == n");
  FleshMorphism f;
  f.space = sp;
  for (auto s : sp.x) f.phi.push_back(sp.var(s));
  for (std::size_t j = 0; j < sp.psi.size(); ++j) f.chi.push_back(SuperPolynomial(sp.table));
  return f;
}

CheckOutcome morphism_check(const Pullback& pb, const TablePtr& table, const SuperPolynomial& f,
                            const SuperPolynomial& g, const Scalar& a, const Scalar& b,
                            bool require_parity) {
  const auto one = SuperPolynomial::constant(table, Scalar(1));
  if (pb(one) != one) return {false, "pullback of 1 is " + pb(one).str()};
  const auto pf = pb(f), pg = pb(g);
  if (pb(a * f + b * g) != a * pf + b * pg) return {false, "not linear on (" + f.str() + ", " + g.str() + ")"};
  const auto lhs = pb(f * g), rhs = pf * pg;
  if (lhs != rhs)
    return {false, "not multiplicative on (" + f.str() + ", " + g.str() + "): difference " + (lhs - rhs).str()};
  if (require_parity)
    for (const auto& h : {f.even_part(), f.odd_part(), g.even_part(), g.odd_part()}) {
      const auto ph = pb(h);
      if (h.is_zero()) continue;
      const bool ok = h.is_even() ? ph.is_even() : ph.is_odd();
      if (!ok) return {false, "parity not preserved on " + h.str() + " -> " + ph.str()};
    }
  return {};
}

CheckOutcome morphism_check(const FleshMorphism& phi, const SuperPolynomial& f, const SuperPolynomial& g,
                            const Scalar& a, const Scalar& b) {
  return morphism_check([&](const SuperPolynomial& h) { return phi.pullback(h); }, phi.space.table, f, g, a, b,
                        true);
}

PointTangent PointTangent::make(std::vector<Rational> point, std::vector<Rational> v) {
  if (point.size() != v.size()) throw PreconditionError("point and tangent vector sizes differ");
  PointTangent p;
  SymbolTable t;
  const std::size_t n = point.size();
  for (std::size_t i = 1; i <= n; ++i) p.y.push_back(t.add_even(n == 1 ? "y" : "y" + std::to_string(i)));
  p.th = t.add_odd("th");
  p.table = freeze(std::move(t));
  p.point = std::move(point);
  p.v = std::move(v);
  return p;
}

namespace {

SuperPolynomial at_point(const SuperPolynomial& f, const std::vector<std::uint32_t>& y,
                         const std::vector<Rational>& p) {
  std::map<std::uint32_t, SuperPolynomial> sub;
  for (std::size_t i = 0; i < y.size(); ++i) sub[y[i]] = SuperPolynomial::constant(f.table(), Scalar(p[i]));
  return f.substitute(sub);
}

SuperPolynomial directional(const TablePtr& t, const SuperPolynomial& f, const std::vector<std::uint32_t>& y,
                            const std::vector<Rational>& p, const std::vector<Rational>& v) {
  SuperPolynomial r(t);
  if (v.empty()) return r;
  for (std::size_t i = 0; i < y.size(); ++i)
    r += at_point(Derivation::partial(t, y[i])(f), y, p) * Scalar(v[i]);
  return r;
}

}  // namespace

SuperPolynomial PointTangent::pullback(const SuperPolynomial& f) const {
  const auto g = f.retable(table);
  return at_point(g, y, point) + directional(table, g, y, point, v) * SuperPolynomial::variable(table, th);
}

bool odd_plane_obstruction(const std::vector<Rational>& point, const std::vector<Rational>& v1,
                           const std::vector<Rational>& v2, const std::vector<Rational>& w) {
  SymbolTable st;
  const std::size_t n = point.size();
  std::vector<std::uint32_t> y;
  for (std::size_t i = 1; i <= n; ++i) y.push_back(st.add_even("y" + std::to_string(i)));
  const auto th1 = st.add_odd("th1"), th2 = st.add_odd("th2");
  const TablePtr t = freeze(std::move(st));
  const auto T1 = SuperPolynomial::variable(t, th1), T2 = SuperPolynomial::variable(t, th2);
  auto pb = [&](const SuperPolynomial& f) {
    return at_point(f, y, point) + directional(t, f, y, point, v1) * T1 + directional(t, f, y, point, v2) * T2 +
           directional(t, f, y, point, w) * T1 * T2;
  };
  std::vector<SuperPolynomial> monos = {SuperPolynomial::constant(t, Scalar(1))};
  for (std::size_t i = 0; i < n; ++i) {
    monos.push_back(SuperPolynomial::variable(t, y[i]));
    for (std::size_t j = i; j < n; ++j)
      monos.push_back(SuperPolynomial::variable(t, y[i]) * SuperPolynomial::variable(t, y[j]));
  }
  for (const auto& f : monos)
    for (const auto& g : monos)
      if (pb(f * g) != pb(f) * pb(g)) return false;
  return true;
}

SuperPolynomial Factorization::apply(const SuperPolynomial& f) const {
  const auto& sp = source->space;
  SuperPolynomial cur = f.retable(sp.table);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    SuperPolynomial thA = SuperPolynomial::constant(sp.table, Scalar(1));
    for (auto a : it->first) thA = thA * sp.var(sp.theta.at(a - 1));
    cur = cur + thA * it->second(cur);
  }
  SuperPolynomial total = cur, term = cur;
  Rational fact(1);
  for (unsigned n = 1; !term.is_zero(); ++n) {
    term = xi_empty(term);
    fact *= n;
    total += term * Scalar(Rational(1) / fact);
  }
  return total;
}

SuperPolynomial Factorization::pullback(const SuperPolynomial& f) const {
  const auto& sp = source->space;
  std::map<std::uint32_t, SuperPolynomial> sub;
  for (std::size_t i = 0; i < sp.y.size(); ++i) sub[sp.y[i]] = source->phi.at(i);
  for (std::size_t j = 0; j < sp.psi.size(); ++j) sub[sp.psi[j]] = source->chi.at(j);
  return apply(f).substitute(sub);
}

FactorizeResult factorize(const FleshMorphism& phi) {
  const auto& sp = phi.space;
  FactorizeResult res;
  for (auto a = phi.xi.begin(); a != phi.xi.end(); ++a)
    for (auto b = std::next(a); b != phi.xi.end(); ++b) {
      const Derivation br = super_bracket(a->second, b->second, sp.y);
      if (!br.images().empty()) {
        auto idx = [](const MultiIndex& I) {
          std::string s;
          for (auto i : I) s += std::to_string(i);
          return s;
        };
        res.obstruction = "[xi_" + idx(a->first) + ", xi_" + idx(b->first) + "] = " + br.str();
        return res;
      }
    }
  Factorization fz;
  fz.source = &phi;
  fz.xi_empty = Derivation(sp.table, Parity::Even, "Xi_0");
  std::map<MultiIndex, Derivation> parts;
  for (const auto& [I, v] : phi.xi) {
    MultiIndex A, rest;
    for (auto i : I) (i <= sp.k ? A : rest).push_back(i);
    const SuperPolynomial er = sp.odd_monomial(rest);
    const Parity par = A.size() % 2 ? Parity::Odd : Parity::Even;
    Derivation& target = A.empty() ? fz.xi_empty : parts.try_emplace(A, sp.table, par, "Xi_A").first->second;
    for (auto y : sp.y) target.set_image(y, target.image(y) + er * v.image(y));
  }
  for (auto& [A, d] : parts) fz.parts.emplace_back(A, std::move(d));
  res.form = std::move(fz);
  return res;
}

std::vector<ComponentMap> component_fields(const FleshMorphism& phi) {
  const auto& sp = phi.space;
  std::vector<ComponentMap> out;
  for (auto y : sp.y) {
    const SuperPolynomial full = phi.pullback(sp.var(y));
    ComponentMap cm;
    for (unsigned mask = 0; mask < (1u << sp.k); ++mask) {
      MultiIndex A;
      std::vector<std::uint32_t> syms, others;
      for (unsigned a = 0; a < sp.k; ++a) {
        if (mask & (1u << a)) {
          A.push_back(a + 1);
          syms.push_back(sp.theta[a]);
        } else {
          others.push_back(sp.theta[a]);
        }
      }
      cm[A] = full.left_cofactor(syms).without(others);
    }
    out.push_back(std::move(cm));
  }
  return out;
}

std::optional<std::pair<MultiIndex, MultiIndex>> chart_violation(const FleshMorphism& phi) {
  for (const auto& [I, a] : phi.xi)
    for (const auto& [J, b] : phi.xi)
      for (auto y : phi.space.y)
        if (!a(b.image(y)).is_zero()) return std::make_pair(I, J);
  return std::nullopt;
}

SuperPolynomial nonlinear_expansion(const FleshMorphism& phi, const SuperPolynomial& f) {
  const auto& sp = phi.space;
  if (sp.k != 2) throw PreconditionError("nonlinear expansion is stated for two odd source coordinates");
  const auto comps = component_fields(phi);
  const std::size_t n = sp.y.size();
  std::map<std::uint32_t, SuperPolynomial> at;
  for (std::size_t i = 0; i < n; ++i) at[sp.y[i]] = comps[i].at({});
  const auto g = f.retable(sp.table);
  const auto T1 = sp.var(sp.theta[0]), T2 = sp.var(sp.theta[1]);
  SuperPolynomial r = g.substitute(at);
  for (std::size_t i = 0; i < n; ++i) {
    const Derivation di = Derivation::partial(sp.table, sp.y[i]);
    const SuperPolynomial dfi = di(g).substitute(at);
    r += T1 * dfi * comps[i].at({1}) + T2 * dfi * comps[i].at({2}) + T1 * T2 * dfi * comps[i].at({1, 2});
    for (std::size_t j = 0; j < n; ++j) {
      const SuperPolynomial dfij = Derivation::partial(sp.table, sp.y[j])(di(g)).substitute(at);
      r -= T1 * T2 * dfij * comps[i].at({1}) * comps[j].at({2});
    }
  }
  return r;
}

bool nonlinear_expansion_check(const FleshMorphism& phi, const SuperPolynomial& f) {
  return phi.pullback(f) == nonlinear_expansion(phi, f);
}

}  // namespace sg
