#include "supergrass/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "supergrass/divalg.hpp"
#include "supergrass/expr_io.hpp"
#include "supergrass/minkowski.hpp"
#include "supergrass/models.hpp"
#include "supergrass/morphisms.hpp"
#include "supergrass/random.hpp"
#include "supergrass/sl4c.hpp"
#include "supergrass/superspace.hpp"

namespace sg {
namespace {

using CheckFn = std::function<CheckOutcome(Rng&, unsigned cases)>;

struct Check {
  std::string id;
  unsigned criterion;
  std::string anchor;
  CheckFn fn;
  /// A failed informational check is reported as a note.
  bool informational = false;
};

using Registry = std::vector<Check>;

std::uint64_t check_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

CheckOutcome mismatch(const std::string& where, const std::string& lhs, const std::string& rhs) {
  return CheckOutcome::fail(where + ": " + lhs + " != " + rhs);
}

CheckOutcome mismatch(const std::string& where, const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
  return mismatch(where, lhs.str(), rhs.str());
}

CheckOutcome mismatch(const std::string& where, const Derivation& lhs, const Derivation& rhs) {
  return mismatch(where, lhs.str(), rhs.str());
}

Parity flip(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }
int sign(Parity a, Parity b) { return a == Parity::Odd && b == Parity::Odd ? -1 : 1; }
Parity random_parity(Rng& rng) { return rng.coin() ? Parity::Odd : Parity::Even; }

SuperPolynomial random_homogeneous(Rng& rng, const TablePtr& t, PolyShape shape, Parity p) {
  shape.want = p == Parity::Odd ? Want::Odd : Want::Even;
  return random_poly(rng, t, shape);
}

/// Random derivation of parity p moving a random subset of `domain`.
Derivation random_derivation(Rng& rng, const TablePtr& t, Parity p, const std::vector<std::uint32_t>& domain,
                             const std::vector<std::uint32_t>& image_symbols) {
  PolyShape sh;
  sh.symbols = image_symbols;
  sh.max_terms = 3;
  sh.max_even_degree = 2;
  sh.max_odd = 2;
  Derivation d(t, p);
  for (auto s : domain)
    if (rng.coin()) d.set_image(s, random_homogeneous(rng, t, sh, flip(p, t->at(s).parity())));
  return d;
}

std::vector<std::uint32_t> all_symbols(const TablePtr& t) {
  std::vector<std::uint32_t> v(t->size());
  for (std::uint32_t i = 0; i < t->size(); ++i) v[i] = i;
  return v;
}

TablePtr grassmann_table(bool clifford) {
  SymbolTable st;
  st.add_even("x");
  st.add_even("t");
  for (auto n : {"th1", "th2", "th3", "et1", "et2"}) st.add_odd(n);
  if (clifford) st.add_clifford("eps", Rational(1));
  return freeze(std::move(st));
}

// kernel ----------------------------------------------------------------------

void kernel_checks(Registry& r) {
  r.push_back({"kernel.associativity", 1, "(fg)h = f(gh), Grassmann and Clifford generators", [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(true);
                 PolyShape sh;
                 for (unsigned i = 0; i < n; ++i) {
                   sh.gaussian = i % 3 == 0;
                   const auto a = random_poly(rng, t, sh), b = random_poly(rng, t, sh), c = random_poly(rng, t, sh);
                   if ((a * b) * c != a * (b * c))
                     return mismatch("f = " + a.str() + ", g = " + b.str() + ", h = " + c.str(), (a * b) * c, a * (b * c));
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.graded_commutativity", 1, "fg = (-1)^{|f||g|} gf", [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(false);
                 PolyShape sh;
                 for (unsigned i = 0; i < n; ++i) {
                   const Parity pa = random_parity(rng), pb = random_parity(rng);
                   const auto a = random_homogeneous(rng, t, sh, pa), b = random_homogeneous(rng, t, sh, pb);
                   const auto rhs = Scalar(sign(pa, pb)) * (b * a);
                   if (a * b != rhs) return mismatch("f = " + a.str() + ", g = " + b.str(), a * b, rhs);
                 }
                 for (std::uint32_t s = 2; s < 7; ++s)
                   for (std::uint32_t u = 2; u < 7; ++u) {
                     const auto a = SuperPolynomial::variable(t, s), b = SuperPolynomial::variable(t, u);
                     if (a * b != -(b * a)) return mismatch("generators", a * b, -(b * a));
                   }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.odd_nilpotency", 1, "(th^i)^2 = 0 and f^2 = 0 for odd f", [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(false);
                 SuperPolynomial top = SuperPolynomial::constant(t, Scalar(1));
                 for (std::uint32_t s = 2; s < 7; ++s) {
                   const auto v = SuperPolynomial::variable(t, s);
                   if (!(v * v).is_zero()) return mismatch(v.str() + "^2", v * v, SuperPolynomial(t));
                   top = top * v;
                 }
                 if (top.is_zero()) return CheckOutcome::fail("product of all odd generators vanishes");
                 PolyShape sh;
                 for (unsigned i = 0; i < n; ++i) {
                   const auto f = random_homogeneous(rng, t, sh, Parity::Odd);
                   if (!(f * f).is_zero()) return mismatch("f = " + f.str(), f * f, SuperPolynomial(t));
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.leibniz", 1, "X(fg) = X(f)g + (-1)^{|X||f|} f X(g)", [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(false);
                 std::vector<Derivation> builtins;
                 for (std::uint32_t s = 0; s < t->size(); ++s) builtins.push_back(Derivation::partial(t, s));
                 const auto th1 = SuperPolynomial::variable(t, "th1");
                 const auto dth = Derivation::partial(t, "th1"), dt = Derivation::partial(t, "t");
                 builtins.push_back(dth - th1 * dt);
                 builtins.push_back(dth + th1 * dt);
                 PolyShape sh;
                 const auto all = all_symbols(t);
                 for (unsigned i = 0; i < n; ++i) {
                   const Parity pf = random_parity(rng);
                   const auto f = random_homogeneous(rng, t, sh, pf), g = random_poly(rng, t, sh);
                   auto ops = builtins;
                   ops.push_back(random_derivation(rng, t, random_parity(rng), all, all));
                   for (const auto& X : ops) {
                     const auto lhs = X(f * g);
                     const auto rhs = X(f) * g + Scalar(sign(X.parity(), pf)) * (f * X(g));
                     if (lhs != rhs) return mismatch("X = " + X.str() + ", f = " + f.str() + ", g = " + g.str(), lhs, rhs);
                   }
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.bracket_skew_symmetry", 1, "[X,Y] = -(-1)^{|X||Y|}[Y,X]", [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(false);
                 const auto all = all_symbols(t);
                 for (unsigned i = 0; i < n; ++i) {
                   const auto X = random_derivation(rng, t, random_parity(rng), all, all);
                   const auto Y = random_derivation(rng, t, random_parity(rng), all, all);
                   const auto lhs = super_bracket(X, Y);
                   const auto rhs = Scalar(-sign(X.parity(), Y.parity())) * super_bracket(Y, X);
                   if (lhs != rhs) return mismatch("X = " + X.str() + ", Y = " + Y.str(), lhs, rhs);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.jacobi", 1, "graded Jacobi identity for random derivation triples", [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(false);
                 const auto all = all_symbols(t);
                 for (unsigned i = 0; i < n; ++i) {
                   const auto X = random_derivation(rng, t, random_parity(rng), all, all);
                   const auto Y = random_derivation(rng, t, random_parity(rng), all, all);
                   const auto Z = random_derivation(rng, t, random_parity(rng), all, all);
                   if (!jacobi_check(X, Y, Z))
                     return CheckOutcome::fail("X = " + X.str() + ", Y = " + Y.str() + ", Z = " + Z.str());
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.tensoring", 1, "[et1 X, et2 Y] = -et1 et2 [X,Y] for odd X, Y; sign (-1)^{|X|} in general",
               [](Rng& rng, unsigned n) {
                 const auto t = grassmann_table(false);
                 const std::vector<std::uint32_t> dom = {0, 1, 2, 3, 4};  // x, t, th1..th3
                 const auto e1 = SuperPolynomial::variable(t, "et1"), e2 = SuperPolynomial::variable(t, "et2");
                 for (unsigned i = 0; i < n; ++i) {
                   const Parity px = i % 2 ? random_parity(rng) : Parity::Odd;
                   const Parity py = i % 2 ? random_parity(rng) : Parity::Odd;
                   const auto X = random_derivation(rng, t, px, dom, dom);
                   const auto Y = random_derivation(rng, t, py, dom, dom);
                   const auto lhs = super_bracket(e1 * X, e2 * Y);
                   const auto rhs = (Scalar(px == Parity::Odd ? -1 : 1) * (e1 * e2)) * super_bracket(X, Y);
                   if (lhs != rhs) return mismatch("X = " + X.str() + ", Y = " + Y.str(), lhs, rhs);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"kernel.cartan", 1, "[d,d] = 0, [i,i] = 0, L = [d,i], [L,d] = 0, [L,i] = 0", [](Rng& rng, unsigned n) {
                 const auto forms = forms_table(2);
                 const std::vector<std::uint32_t> xs = {forms->index("x1"), forms->index("x2")};
                 const auto all = all_symbols(forms);
                 PolyShape sh;
                 sh.symbols = xs;
                 sh.max_terms = 3;
                 for (unsigned i = 0; i < std::max(1u, n / 10); ++i) {
                   const std::vector<SuperPolynomial> xi = {random_poly(rng, forms, sh), random_poly(rng, forms, sh)};
                   const auto ct = cartan_triple(forms, xi);
                   const std::string where = "xi = (" + xi[0].str() + ", " + xi[1].str() + ")";
                   if (!super_bracket(ct.d, ct.d, all).images().empty()) return CheckOutcome::fail(where + ": [d,d] != 0");
                   if (!super_bracket(ct.iota, ct.iota, all).images().empty())
                     return CheckOutcome::fail(where + ": [i,i] != 0");
                   if (super_bracket(ct.d, ct.iota, all) != ct.lie)
                     return mismatch(where, super_bracket(ct.d, ct.iota, all), ct.lie);
                   if (!super_bracket(ct.lie, ct.d, all).images().empty()) return CheckOutcome::fail(where + ": [L,d] != 0");
                   if (!super_bracket(ct.lie, ct.iota, all).images().empty())
                     return CheckOutcome::fail(where + ": [L,i] != 0");
                 }
                 return CheckOutcome{};
               }});
}

// divalg ----------------------------------------------------------------------

using E = DAElement<Rational>;
const DivAlg kAlgebras[] = {DivAlg::R, DivAlg::C, DivAlg::H, DivAlg::O};

void divalg_checks(Registry& r) {
  r.push_back({"divalg.clifford_complex", 2, "C(R, eps^2 = -1) = C via 1 -> 1, eps -> i", [](Rng& rng, unsigned n) {
                 if (!clifford_complex_check()) return CheckOutcome::fail("basis products differ");
                 SymbolTable st;
                 const auto e = st.add_clifford("eps", Rational(1));
                 const auto t = freeze(std::move(st));
                 const auto eps = SuperPolynomial::variable(t, e);
                 const auto embed = [&](const Scalar& z) {
                   return SuperPolynomial::constant(t, Scalar(z.re())) + Scalar(z.im()) * eps;
                 };
                 for (unsigned i = 0; i < n; ++i) {
                   const Scalar a(rng.rational(), rng.rational()), b(rng.rational(), rng.rational());
                   if (embed(a) * embed(b) != embed(a * b))
                     return mismatch("a = " + embed(a).str() + ", b = " + embed(b).str(), embed(a) * embed(b), embed(a * b));
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"divalg.octonion_pairs", 2, "u1u2 = u3u4 = u6u7 = u8u5 = u2", [](Rng&, unsigned) {
                 const auto u = [](unsigned i) { return E::unit(DivAlg::O, i - 1, Rational(1)); };
                 for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {3, 4}, {6, 7}, {8, 5}})
                   if (u(a) * u(b) != u(2))
                     return CheckOutcome::fail("u" + std::to_string(a) + "u" + std::to_string(b) + " = " + to_string(u(a) * u(b)));
                 return CheckOutcome{};
               }});
  for (auto tag : kAlgebras) {
    r.push_back({"divalg." + name(tag) + ".norm_multiplicative", 2, "|ab|^2 = |a|^2 |b|^2, conj(ab) = conj(b) conj(a)",
                 [tag](Rng& rng, unsigned n) {
                   for (unsigned i = 0; i < n; ++i) {
                     const auto a = random_element(rng, tag), b = random_element(rng, tag);
                     const std::string where = "a = " + to_string(a) + ", b = " + to_string(b);
                     if (norm_sq(a * b) != norm_sq(a) * norm_sq(b))
                       return mismatch(where, norm_sq(a * b).get_str(), Rational(norm_sq(a) * norm_sq(b)).get_str());
                     if ((a * b).conj() != b.conj() * a.conj())
                       return mismatch(where, to_string((a * b).conj()), to_string(b.conj() * a.conj()));
                   }
                   return CheckOutcome{};
                 }});
  }
  r.push_back({"divalg.O.alternative", 2, "(aa)b = a(ab), (ba)a = b(aa)", [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const auto a = random_element(rng, DivAlg::O), b = random_element(rng, DivAlg::O);
                   const std::string where = "a = " + to_string(a) + ", b = " + to_string(b);
                   if ((a * a) * b != a * (a * b)) return mismatch(where, to_string((a * a) * b), to_string(a * (a * b)));
                   if ((b * a) * a != b * (a * a)) return mismatch(where, to_string((b * a) * a), to_string(b * (a * a)));
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"divalg.gamma", 2, "u_a conj(u_b) - u_b conj(u_a) = 2 Gamma^{[ab]c} u_c", [](Rng&, unsigned) {
                 for (auto tag : kAlgebras) {
                   const auto g = gamma_constants(tag);
                   const unsigned k = dim(tag);
                   for (unsigned x = 0; x < k; ++x)
                     for (unsigned y = 0; y < k; ++y) {
                       const auto ux = E::unit(tag, x, Rational(1)), uy = E::unit(tag, y, Rational(1));
                       const E lhs = ux * uy.conj() - uy * ux.conj();
                       E rhs(tag);
                       for (unsigned c = 0; c < k; ++c) rhs[c] = 2 * g[x][y][c];
                       if (lhs != rhs)
                         return mismatch(name(tag) + " (" + std::to_string(x + 1) + ", " + std::to_string(y + 1) + ")",
                                         to_string(lhs), to_string(rhs));
                     }
                 }
                 return CheckOutcome{};
               }});
}

// superspace and lift -----------------------------------------------------------

void superspace_checks(Registry& r) {
  r.push_back({"superspace.supertime_brackets", 3, "[D,D] = -2d/dt, [tau,tau] = 2d/dt, [D,tau] = 0, tau - D = 2 th d/dt",
               [](Rng& rng, unsigned n) {
                 const auto s = supertime();
                 const auto th = SuperPolynomial::variable(s.table, "th"), t = SuperPolynomial::variable(s.table, "t");
                 const Derivation zero(s.table, Parity::Even);
                 const std::vector<std::pair<Derivation, Derivation>> ops = {{super_bracket(s.D, s.D), Scalar(-2) * s.dt},
                                                                             {super_bracket(s.tau, s.tau), Scalar(2) * s.dt},
                                                                             {super_bracket(s.D, s.tau), zero},
                                                                             {s.tau - s.D, (Scalar(2) * th) * s.dt}};
                 for (const auto& [lhs, rhs] : ops)
                   if (lhs != rhs) return mismatch("operator identity", lhs, rhs);
                 std::vector<SuperPolynomial> basis = {SuperPolynomial::constant(s.table, Scalar(1)), th};
                 for (unsigned d = 1; d <= 3; ++d) {
                   basis.push_back(t.pow(d));
                   basis.push_back(t.pow(d) * th);
                 }
                 PolyShape sh;
                 sh.symbols = {s.table->index("t"), s.table->index("th")};
                 sh.max_even_degree = 4;
                 for (unsigned i = 0; i < n; ++i) basis.push_back(random_poly(rng, s.table, sh));
                 for (const auto& b : basis) {
                   const auto DD = s.D(s.D(b)), TT = s.tau(s.tau(b));
                   if (DD != -s.dt(b)) return mismatch("D^2 on " + b.str(), DD, -s.dt(b));
                   if (TT != s.dt(b)) return mismatch("tau^2 on " + b.str(), TT, s.dt(b));
                   const auto dt_ = s.D(s.tau(b)) + s.tau(s.D(b));
                   if (!dt_.is_zero()) return mismatch("[D,tau] on " + b.str(), dt_, SuperPolynomial(s.table));
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"superspace.berezin_translation", 3, "int f(x, th + zeta) = int f(x, th)", [](Rng& rng, unsigned n) {
                 const auto d = SuperDomain::make(2, 3, 3);
                 PolyShape sh;
                 sh.max_terms = 6;
                 sh.max_odd = 5;
                 PolyShape zs;
                 zs.symbols = d.eta;
                 zs.symbols.insert(zs.symbols.end(), d.x.begin(), d.x.end());
                 zs.want = Want::Odd;
                 for (unsigned i = 0; i < n; ++i) {
                   const auto f = random_poly(rng, d.table, sh);
                   std::vector<SuperPolynomial> zeta;
                   for (int a = 0; a < 3; ++a) zeta.push_back(random_poly(rng, d.table, zs));
                   if (!berezin_translation_check(d, f, zeta))
                     return CheckOutcome::fail("f = " + f.str() + ", zeta = (" + zeta[0].str() + ", " + zeta[1].str() +
                                               ", " + zeta[2].str() + ")");
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"superspace.berezin_exactness", 3, "int d/dth^j f = 0", [](Rng& rng, unsigned n) {
                 const auto d = SuperDomain::make(2, 3, 2);
                 PolyShape sh;
                 sh.max_terms = 6;
                 sh.max_odd = 5;
                 for (unsigned i = 0; i < n; ++i) {
                   const auto f = random_poly(rng, d.table, sh);
                   for (auto th : d.theta) {
                     const auto v = berezin(Derivation::partial(d.table, th)(f), d.theta);
                     if (!v.is_zero()) return mismatch("f = " + f.str() + ", d/d" + d.table->at(th).name, v, SuperPolynomial(d.table));
                   }
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"superspace.hinf_morphism", 3, "f(z) g(z) = (fg)(z) for even Grassmann z", [](Rng& rng, unsigned n) {
                 const auto d = SuperDomain::make(2, 0, 4);
                 PolyShape fs;
                 fs.symbols = d.x;
                 fs.max_even_degree = 3;
                 PolyShape zs;
                 zs.symbols = d.eta;
                 zs.want = Want::Even;
                 zs.max_odd = 4;
                 for (unsigned i = 0; i < n; ++i) {
                   const auto f = random_poly(rng, d.table, fs), g = random_poly(rng, d.table, fs);
                   const std::vector<SuperPolynomial> z = {random_poly(rng, d.table, zs), random_poly(rng, d.table, zs)};
                   const std::string where = "f = " + f.str() + ", g = " + g.str() + ", z = (" + z[0].str() + ", " + z[1].str() + ")";
                   const auto ef = hinf_extend(f, d.x, z), eg = hinf_extend(g, d.x, z);
                   if (hinf_extend(f * g, d.x, z) != ef * eg) return mismatch(where, hinf_extend(f * g, d.x, z), ef * eg);
                   if (hinf_extend(f + g, d.x, z) != ef + eg) return mismatch(where, hinf_extend(f + g, d.x, z), ef + eg);
                   const std::map<std::uint32_t, SuperPolynomial> sub = {{d.x[0], z[0]}, {d.x[1], z[1]}};
                   if (ef != f.substitute(sub)) return mismatch(where, ef, f.substitute(sub));
                 }
                 return CheckOutcome{};
               }});

  r.push_back({"superspace.lift_round_trip", 5, "lower(lift f) = f, lift(lower F) = reduce(F)", [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const auto sp = LiftSpace::make(1 + i % 2, 1 + i % 6);
                   PolyShape fs;
                   fs.symbols = sp.x;
                   fs.symbols.insert(fs.symbols.end(), sp.eta.begin(), sp.eta.end());
                   fs.max_odd = sp.q;
                   fs.max_terms = 5;
                   fs.want = Want::Even;
                   const auto f = random_poly(rng, sp.table, fs);
                   const auto back = theta_lower(sp, theta_lift(sp, f));
                   if (back != f) return mismatch("q = " + std::to_string(sp.q) + ", f = " + f.str(), back, f);
                   if (sp.s.empty()) continue;
                   PolyShape Fs;
                   Fs.symbols = sp.s;
                   Fs.symbols.insert(Fs.symbols.end(), sp.x.begin(), sp.x.end());
                   Fs.max_even_degree = 3;
                   const auto F = random_poly(rng, sp.table, Fs);
                   const auto lhs = theta_lift(sp, theta_lower(sp, F)), rhs = reduce_ideal(sp, F);
                   if (lhs != rhs) return mismatch("q = " + std::to_string(sp.q) + ", F = " + F.str(), lhs, rhs);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"superspace.lift_ideal_confluence", 5, "s^I s^J reduction is order independent and preserves lower",
               [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const auto sp = LiftSpace::make(1, 2 + i % 5);
                   PolyShape sh;
                   sh.symbols = sp.s;
                   sh.symbols.push_back(sp.x[0]);
                   sh.max_even_degree = 3;
                   sh.max_terms = 5;
                   const auto F = random_poly(rng, sp.table, sh);
                   const auto r1 = reduce_ideal(sp, F), r2 = reduce_ideal(sp, F, true);
                   if (r1 != r2) return mismatch("F = " + F.str(), r1, r2);
                   if (theta_lower(sp, F) != theta_lower(sp, r1)) return mismatch("F = " + F.str(), theta_lower(sp, F), theta_lower(sp, r1));
                 }
                 return CheckOutcome{};
               }});
  const char* field_anchor[] = {"", "X = d/dx: X lower(F) = lower(X F)", "X = et1 et2 d/dx lifts to s12 d/dx",
                                "X = et1 d/det2 lifts to the s-rotation"};
  for (unsigned c = 1; c <= 3; ++c)
    r.push_back({"superspace.lift_vector_field_" + std::to_string(c), 5, field_anchor[c], [c](Rng& rng, unsigned n) {
                   std::map<unsigned, LiftSpace> spaces;
                   for (unsigned i = 0; i < n; ++i) {
                     const unsigned q = 2 + i % 5;
                     if (!spaces.count(q)) spaces.emplace(q, LiftSpace::make(1 + q % 2, q));
                     const auto& sp = spaces.at(q);
                     PolyShape sh;
                     sh.symbols = sp.s;
                     sh.symbols.insert(sh.symbols.end(), sp.x.begin(), sp.x.end());
                     sh.max_even_degree = 3;
                     sh.max_terms = 5;
                     const auto out = lift_vector_field_check(sp, c, random_poly(rng, sp.table, sh));
                     if (!out.ok) return CheckOutcome::fail("q = " + std::to_string(q) + ", " + out.detail);
                   }
                   return CheckOutcome{};
                 }});
}

// morphisms -------------------------------------------------------------------

Derivation target_field(const MorphismSpace& sp, const std::vector<SuperPolynomial>& coeffs) {
  Derivation d(sp.table, Parity::Even);
  for (std::size_t i = 0; i < sp.y.size(); ++i) d.set_image(sp.y[i], coeffs.at(i));
  return d;
}

/// Random increasing index set of even length >= 2 in 1..q.
MultiIndex random_even_index(Rng& rng, unsigned q) {
  const unsigned len = 2 * static_cast<unsigned>(rng.uniform(1, q / 2));
  std::vector<unsigned> all(q);
  for (unsigned i = 0; i < q; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng.engine());
  MultiIndex I(all.begin(), all.begin() + len);
  std::sort(I.begin(), I.end());
  return I;
}

enum class FieldKind { Polynomial, Constant, Proportional };

FleshMorphism random_morphism(Rng& rng, const MorphismSpace& sp, FieldKind kind) {
  FleshMorphism f;
  f.space = sp;
  PolyShape xs;
  xs.symbols = sp.x;
  xs.max_even_degree = 3;
  xs.max_terms = 3;
  for (unsigned i = 0; i < sp.n; ++i) f.phi.push_back(sp.m ? random_poly(rng, sp.table, xs) : SuperPolynomial::constant(sp.table, Scalar(rng.rational())));
  PolyShape odd;
  odd.symbols = sp.odd_source();
  odd.symbols.insert(odd.symbols.end(), sp.x.begin(), sp.x.end());
  odd.want = Want::Odd;
  odd.max_terms = 3;
  for (unsigned j = 0; j < sp.l; ++j)
    f.chi.push_back(sp.q() ? random_poly(rng, sp.table, odd) : SuperPolynomial(sp.table));
  if (sp.q() < 2) return f;
  PolyShape ys;
  ys.symbols = sp.y;
  ys.max_even_degree = kind == FieldKind::Polynomial ? 3 : 2;
  ys.max_terms = 2;
  std::vector<SuperPolynomial> common;
  for (unsigned i = 0; i < sp.n; ++i) common.push_back(random_poly(rng, sp.table, ys));
  const unsigned count = static_cast<unsigned>(rng.uniform(1, 3));
  for (unsigned c = 0; c < count; ++c) {
    std::vector<SuperPolynomial> coeffs;
    const Scalar scale(rng.nonzero_rational());
    for (unsigned i = 0; i < sp.n; ++i) {
      switch (kind) {
        case FieldKind::Polynomial:
          coeffs.push_back(random_poly(rng, sp.table, ys));
          break;
        case FieldKind::Constant:
          coeffs.push_back(SuperPolynomial::constant(sp.table, Scalar(rng.rational())));
          break;
        case FieldKind::Proportional:
          coeffs.push_back(scale * common[i]);
          break;
      }
    }
    f.xi[random_even_index(rng, sp.q())] = target_field(sp, coeffs);
  }
  return f;
}

std::string describe(const FleshMorphism& f) {
  std::string s = "phi = (";
  for (std::size_t i = 0; i < f.phi.size(); ++i) s += (i ? ", " : "") + f.phi[i].str();
  s += "), chi = (";
  for (std::size_t i = 0; i < f.chi.size(); ++i) s += (i ? ", " : "") + f.chi[i].str();
  s += ")";
  for (const auto& [I, X] : f.xi) {
    s += ", xi_";
    for (auto i : I) s += std::to_string(i);
    s += " = " + X.str();
  }
  return s;
}

SuperPolynomial random_target_function(Rng& rng, const MorphismSpace& sp, bool with_odd) {
  PolyShape fs;
  fs.symbols = sp.y;
  if (with_odd) fs.symbols.insert(fs.symbols.end(), sp.psi.begin(), sp.psi.end());
  fs.max_even_degree = 3;
  fs.max_terms = 3;
  return random_poly(rng, sp.table, fs);
}

std::vector<Rational> random_vector(Rng& rng, unsigned n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rng.rational();
  return v;
}

void morphism_checks(Registry& r) {
  r.push_back({"morphisms.random_pullback", 4, "Phi^*1 = 1, Phi^*(af + bg) = aPhi^*f + bPhi^*g, Phi^*(fg) = Phi^*f Phi^*g",
               [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const unsigned k = static_cast<unsigned>(rng.uniform(0, 3));
                   const unsigned L = static_cast<unsigned>(rng.uniform(k < 2 ? 2 - k : 0, 6 - k));
                   const auto sp = MorphismSpace::make(static_cast<unsigned>(rng.uniform(1, 2)), k, L,
                                                       static_cast<unsigned>(rng.uniform(1, 2)),
                                                       static_cast<unsigned>(rng.uniform(0, 2)));
                   const auto f = random_morphism(rng, sp, FieldKind::Polynomial);
                   const auto a = random_target_function(rng, sp, true), b = random_target_function(rng, sp, true);
                   const auto out = morphism_check(f, a, b, Scalar(rng.nonzero_rational()), Scalar(rng.nonzero_rational()));
                   if (!out.ok) return CheckOutcome::fail(describe(f) + ": " + out.detail);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"morphisms.collapse", 4, "R^{0|0} -> R^{n|l} is evaluation at a point", [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const auto sp = MorphismSpace::make(0, 0, 0, static_cast<unsigned>(rng.uniform(0, 2)),
                                                       static_cast<unsigned>(rng.uniform(1, 2)));
                   FleshMorphism f = random_morphism(rng, sp, FieldKind::Constant);
                   std::map<std::uint32_t, SuperPolynomial> at;
                   for (unsigned j = 0; j < sp.n; ++j) at[sp.y[j]] = f.phi[j];
                   const auto g = random_target_function(rng, sp, true);
                   const auto expected = g.without(sp.psi).substitute(at);
                   if (f.pullback(g) != expected) return mismatch(describe(f) + ", f = " + g.str(), f.pullback(g), expected);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"morphisms.point_tangent", 4, "R^{0|1} -> R^n: f -> f(p) + df_p(v) th", [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const unsigned dimn = static_cast<unsigned>(rng.uniform(1, 3));
                   const auto pt = PointTangent::make(random_vector(rng, dimn), random_vector(rng, dimn));
                   PolyShape fs;
                   fs.symbols = pt.y;
                   fs.max_even_degree = 3;
                   const auto f = random_poly(rng, pt.table, fs), g = random_poly(rng, pt.table, fs);
                   std::map<std::uint32_t, SuperPolynomial> at;
                   for (unsigned j = 0; j < dimn; ++j) at[pt.y[j]] = SuperPolynomial::constant(pt.table, Scalar(pt.point[j]));
                   SuperPolynomial df(pt.table);
                   for (unsigned j = 0; j < dimn; ++j) df += Scalar(pt.v[j]) * Derivation::partial(pt.table, pt.y[j])(f);
                   const auto expected = f.substitute(at) + df.substitute(at) * SuperPolynomial::variable(pt.table, pt.th);
                   if (pt.pullback(f) != expected) return mismatch("f = " + f.str(), pt.pullback(f), expected);
                   const auto out = morphism_check([&](const SuperPolynomial& h) { return pt.pullback(h); }, pt.table, f, g,
                                                   Scalar(rng.nonzero_rational()), Scalar(rng.nonzero_rational()), false);
                   if (!out.ok) return out;
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"morphisms.odd_plane_obstruction", 4,
               "f -> f(p) + df(v1) th1 + df(v2) th2 + df(w) th1 th2 is multiplicative iff v1, v2 are dependent",
               [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const auto p = random_vector(rng, 2), w = random_vector(rng, 2);
                   auto v1 = random_vector(rng, 2), v2 = random_vector(rng, 2);
                   if (i % 2) {
                     const Rational c = rng.rational();
                     v2 = {c * v1[0], c * v1[1]};
                   }
                   const bool dependent = v1[0] * v2[1] - v1[1] * v2[0] == 0;
                   if (odd_plane_obstruction(p, v1, v2, w) != dependent)
                     return CheckOutcome::fail("v1 = (" + v1[0].get_str() + ", " + v1[1].get_str() + "), v2 = (" +
                                               v2[0].get_str() + ", " + v2[1].get_str() + "): expected " +
                                               (dependent ? "multiplicative" : "obstruction"));
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"morphisms.factorization", 4, "e^{Xi} = e^{Xi_0} prod_A (1 + th^A Xi_A) for commuting xi_I",
               [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const unsigned k = static_cast<unsigned>(rng.uniform(1, 3));
                   const unsigned L = static_cast<unsigned>(rng.uniform(1, 6 - k));
                   const auto sp = MorphismSpace::make(1, k, L, static_cast<unsigned>(rng.uniform(1, 2)), 0);
                   const auto f = random_morphism(rng, sp, i % 2 ? FieldKind::Constant : FieldKind::Proportional);
                   const auto fr = factorize(f);
                   if (!fr.form) return CheckOutcome::fail(describe(f) + ": no factorization, " + fr.obstruction);
                   const auto g = random_target_function(rng, sp, false);
                   if (fr.form->pullback(g) != f.pullback(g))
                     return mismatch(describe(f) + ", f = " + g.str(), fr.form->pullback(g), f.pullback(g));
                 }
                 // Non-commuting fields have no factorized form.
                 const auto sp = MorphismSpace::make(1, 0, 4, 1, 0);
                 FleshMorphism f;
                 f.space = sp;
                 f.phi = {sp.var(sp.x[0])};
                 const auto y = sp.var(sp.y[0]);
                 f.xi[{1, 2}] = target_field(sp, {y});
                 f.xi[{3, 4}] = target_field(sp, {y.pow(2)});
                 if (factorize(f).form) return CheckOutcome::fail(describe(f) + ": factorized despite [xi_12, xi_34] != 0");
                 return CheckOutcome{};
               }});
  r.push_back({"morphisms.components", 4, "Phi^* y^i = sum_A th^A (component A)", [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const unsigned k = static_cast<unsigned>(rng.uniform(1, 3));
                   const unsigned L = static_cast<unsigned>(rng.uniform(k < 2 ? 2 - k : 0, 6 - k));
                   const auto sp = MorphismSpace::make(1, k, L, static_cast<unsigned>(rng.uniform(1, 2)), 0);
                   const auto f = random_morphism(rng, sp, FieldKind::Polynomial);
                   const auto comps = component_fields(f);
                   for (unsigned j = 0; j < sp.n; ++j) {
                     SuperPolynomial sum(sp.table);
                     for (const auto& [A, c] : comps[j]) sum += sp.odd_monomial(A) * c;
                     const auto direct = f.pullback(sp.var(sp.y[j]));
                     if (sum != direct) return mismatch(describe(f) + ", y" + std::to_string(j + 1), sum, direct);
                   }
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"morphisms.nonlinear_expansion", 4,
               "Phi^*f = f + th^a f_i psi_a^i + th1 th2 (f_i F^i - f_ij psi_1^i psi_2^j)", [](Rng& rng, unsigned n) {
                 for (unsigned i = 0; i < n; ++i) {
                   const auto sp = MorphismSpace::make(1, 2, 2 * static_cast<unsigned>(rng.uniform(0, 2)),
                                                       static_cast<unsigned>(rng.uniform(1, 2)), 0);
                   const auto f = random_morphism(rng, sp, FieldKind::Constant);
                   const auto g = random_target_function(rng, sp, false);
                   if (!nonlinear_expansion_check(f, g))
                     return mismatch(describe(f) + ", f = " + g.str(), f.pullback(g), nonlinear_expansion(f, g));
                 }
                 return CheckOutcome{};
               }});
}

// minkowski -------------------------------------------------------------------

KRational random_nonzero(Rng& rng, DivAlg tag) {
  for (;;) {
    const auto a = random_element(rng, tag);
    if (norm_sq(a) != 0) return a;
  }
}

void minkowski_checks(Registry& r, std::optional<unsigned> only_k) {
  for (auto tag : kAlgebras) {
    const unsigned k = dim(tag);
    if (only_k && *only_k != k) continue;
    const std::string pre = "minkowski." + name(tag) + ".";
    r.push_back({pre + "norm_identity", 6, "4 det X(t, x, z) = t^2 - x^2 - |z|^2", [tag](Rng& rng, unsigned n) {
                   for (unsigned i = 0; i < n; ++i) {
                     const Rational t = rng.rational(), x = rng.rational();
                     const auto z = random_element(rng, tag);
                     const Rational lhs = 4 * Hermitian2::from_txz(tag, t, x, z).det();
                     const Rational rhs = t * t - x * x - norm_sq(z);
                     if (lhs != rhs || minkowski_norm(t, x, z) != rhs)
                       return mismatch("t = " + t.get_str() + ", x = " + x.get_str() + ", z = " + to_string(z), lhs.get_str(),
                                       rhs.get_str());
                   }
                   return CheckOutcome{};
                 }});
    r.push_back({pre + "supercharge_brackets", 6, "[Q_a^l, Q_b^m] in direct, real/imaginary and structure-constant form",
                 [tag](Rng& rng, unsigned n) { return supercharge_bracket_check(tag, std::max(1u, n / 25), rng.next()); }});
    r.push_back({pre + "centrality", 6, "R, I central; triple products vanish",
                 [tag](Rng&, unsigned) { return centrality_check(tag); }});
    r.push_back({pre + "null_vectors", 6, "[Q,Q] = -2X with det X = 0, tr X >= 0", [tag](Rng& rng, unsigned n) {
                   for (unsigned i = 0; i < std::max(1u, n / 4); ++i) {
                     const auto l1 = random_element(rng, tag), l2 = random_element(rng, tag);
                     const auto out = null_vector_check(tag, l1, l2);
                     if (!out.ok) return CheckOutcome::fail("l1 = " + to_string(l1) + ", l2 = " + to_string(l2) + ": " + out.detail);
                   }
                   return CheckOutcome{};
                 }});
    if (tag == DivAlg::C || tag == DivAlg::H)
      r.push_back({pre + "r_symmetry", 6, "lambda -> lambda q^2/|q|^2 leaves [Q,Q] fixed", [tag](Rng& rng, unsigned n) {
                     for (unsigned i = 0; i < std::max(1u, n / 25); ++i) {
                       const auto out = r_symmetry_check(tag, random_nonzero(rng, tag), 2, rng.next());
                       if (!out.ok) return out;
                     }
                     return CheckOutcome{};
                   }});
    r.push_back({pre + "lorentz_table", 6, "rho(sigma) reproduces every boost and rotation row",
                 [tag](Rng&, unsigned) { return lorentz_table_check(tag); }});
    r.push_back({pre + "rotations_from_boosts", 6, "A_ij = -[B_i, B_j]",
                 [k](Rng&, unsigned) { return rotation_from_boosts_check(k); }});
    r.push_back({pre + "lorentz_closure", 6, "dim of the generated Lie algebra = (k+1)(k+2)/2", [tag, k](Rng&, unsigned) {
                   const std::map<unsigned, unsigned> expected = {{1, 3}, {2, 6}, {4, 15}, {8, 45}};
                   const unsigned got = lorentz_closure_dim(tag);
                   if (got != expected.at(k)) return mismatch("closure", std::to_string(got), std::to_string(expected.at(k)));
                   return CheckOutcome{};
                 }});
    if (tag == DivAlg::R || tag == DivAlg::C)
      r.push_back({pre + "lorentz_conjugation", 6, "det(g h g^dagger) = det h for det g = 1", [tag](Rng& rng, unsigned n) {
                     return lorentz_conjugation_check(tag, std::max(1u, n / 10), rng.next());
                   }});
    r.push_back({pre + "group_law", 6, "exp(V,Th) exp(W,Ps) = exp(V + W + [Th,Ps]/2, Th + Ps)", [tag](Rng& rng, unsigned n) {
                   return group_law_check(tag, std::max(1u, n / 50), rng.next());
                 }});
    r.push_back({pre + "invariant_fields", 6, "[tau,D] = 0, [tau,tau] = 2(...), [D,D] = -2(...)",
                 [tag](Rng&, unsigned) { return invariant_fields_check(tag); }});
    if (tag == DivAlg::R)
      r.push_back({pre + "real_dictionary", 6, "k = 1 fields in (t, x, y, th1, th2)",
                   [](Rng&, unsigned) { return real_dictionary_check(); }});
    if (tag == DivAlg::C)
      r.push_back({pre + "chiral", 6, "k = 2 chiral relations and the d_{a b-dot} dictionary",
                   [](Rng&, unsigned) { return chiral_check(); }});
    if (tag == DivAlg::H || tag == DivAlg::O)
      r.push_back({pre + "reduction", 7, "[Q_aA, Q_bB] with the Z_AB table, Z_*AB = conj Z_AB",
                   [tag](Rng&, unsigned) { return reduction_check(tag); }});
    if (tag != DivAlg::H) continue;
    const auto each_u = [](std::function<CheckOutcome(const C4&, const C4&)> f) {
      return [f](Rng& rng, unsigned n) {
        for (unsigned i = 0; i < std::max(1u, n / 4); ++i) {
          const auto u = random_c4(rng), v = random_c4(rng);
          const auto out = f(u, v);
          if (!out.ok) return out;
        }
        return CheckOutcome{};
      };
    };
    r.push_back({pre + "bridge", 7, "P([Q,Q]) = -2 U ^ sigma(U)", each_u([](const C4& u, const C4&) { return bridge_check(u); })});
    r.push_back({pre + "bridge_polarization", 7, "P([Q^l, Q^m]) = -U ^ sigma(V) - V ^ sigma(U)",
                 each_u([](const C4& u, const C4& v) { return polarization_check(u, v); })});
    r.push_back({pre + "bridge_coordinates", 7, "y^{ab} of U ^ sigma(U), reality conditions, P^{-1}",
                 each_u([](const C4& u, const C4&) { return coordinate_table_check(u); })});
    r.push_back({pre + "bridge_derivatives", 7, "d/dy^{ab} in terms of d/dt, d/dx, d/dz",
                 [](Rng&, unsigned) { return derivative_dictionary_check(); }});
    r.push_back({pre + "bridge_form", 7, "4 B(Pv, Pv) = -(t^2 - x^2 - |z|^2)", [](Rng& rng, unsigned n) {
                   for (unsigned i = 0; i < std::max(1u, n / 4); ++i) {
                     const Rational t = rng.rational(), x = rng.rational();
                     const auto z = random_element(rng, DivAlg::H);
                     const auto out = form_check(Rational(4), t, x, z);
                     if (!out.ok) return out;
                   }
                   return CheckOutcome{};
                 }});
    r.push_back({pre + "bridge_form_factor_2", 7, "2 B(Pv, Pv) = -(t^2 - x^2 - |z|^2)", [](Rng& rng, unsigned n) {
                   for (unsigned i = 0; i < std::max(1u, n / 4); ++i) {
                     const Rational t = rng.rational(), x = rng.rational();
                     const auto z = random_element(rng, DivAlg::H);
                     const auto out = form_check(Rational(2), t, x, z);
                     if (!out.ok) return out;
                   }
                   return CheckOutcome{};
                 }});
  }
}

// models ----------------------------------------------------------------------

void model_checks(Registry& r) {
  r.push_back({"models.superparticle.expansion", 8, "D Phi dPhi/dt expands to the flat component density",
               [](Rng&, unsigned) {
                 for (unsigned n = 1; n <= 3; ++n) {
                   const auto out = superparticle_expansion_check(n);
                   if (!out.ok) return CheckOutcome::fail("n = " + std::to_string(n) + ": " + out.detail);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"models.superparticle.plain_variation", 8, "delta L under constant eta is a total derivative",
               [](Rng&, unsigned) {
                 for (unsigned n = 1; n <= 3; ++n) {
                   const auto out = plain_variation_check(n);
                   if (!out.ok) return CheckOutcome::fail("n = " + std::to_string(n) + ": " + out.detail);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"models.superparticle.noether_charge", 8, "modulated variation ~ -eta chi d/dt <psi, xdot>",
               [](Rng&, unsigned) { return modulated_variation(2).outcome; }});
  r.push_back({"models.superparticle.delta1_bracket_formula", 8,
               "two-term bracket formula for the chi_t-linear variation equals delta1",
               [](Rng&, unsigned) {
                 const auto mv = modulated_variation(2);
                 if (mv.intermediate_agrees) return CheckOutcome{};
                 if (mv.intermediate == -mv.delta1)
                   return CheckOutcome::fail("the bracket formula evaluates to -delta1; delta1 = " + mv.delta1.str());
                 return mismatch("bracket formula", mv.intermediate, mv.delta1);
               },
               true});
  r.push_back({"models.superparticle.susy_algebra", 8, "[Q1, Q2] = -2 et1 et2 d/dt on (x, psi)",
               [](Rng&, unsigned) { return susy_algebra_check(2); }});
  r.push_back({"models.superparticle.euler_lagrange", 8, "x'' = 0, psi' = 0 from the component Lagrangian",
               [](Rng&, unsigned) { return superparticle_el_check(2); }});
  r.push_back({"models.sigma.expansion", 8, "D_a Phi expansions and {D_a, D_b} = -2 d_ab",
               [](Rng&, unsigned) { return sigma_expansion_check(); }});
  const auto per_degree = [](unsigned lo, std::function<CheckOutcome(const SigmaModel&, const Superpotential&)> f) {
    return [lo, f](Rng&, unsigned) {
      const auto m = SigmaModel::make();
      for (unsigned d = lo; d <= 4; ++d) {
        const auto out = f(m, m.symbolic_h(d));
        if (!out.ok) return CheckOutcome::fail("deg h = " + std::to_string(d) + ": " + out.detail);
      }
      return CheckOutcome{};
    };
  };
  r.push_back({"models.sigma.action", 8, "superspace density integrates to the component action, deg h <= 4",
               per_degree(0, sigma_action_check)});
  r.push_back({"models.sigma.euler_lagrange", 8, "Euler operator reproduces the component field equations, deg h <= 4",
               per_degree(0, sigma_el_check)});
  r.push_back({"models.sigma.bps", 8, "BPS first-order system implies box phi + h'' h' = 0, deg h <= 4",
               per_degree(0, bps_check)});
  r.push_back({"models.sigma.bogomolnyi", 8, "energy density = BPS squares + total derivative, deg h <= 4",
               per_degree(0, bogomolnyi_check)});
}

// expr_io ---------------------------------------------------------------------

TablePtr dsl_table() {
  SymbolTable st;
  st.add_even("x");
  st.add_even("y");
  st.add_even("phi_t");
  st.add_clifford("eps", Rational(1));
  for (auto n : {"th1", "th2", "th3", "et1", "et2"}) st.add_odd(n);
  return freeze(std::move(st));
}

void expr_io_checks(Registry& r) {
  r.push_back({"expr_io.text_round_trip", 9, "parse(print(e)) = e on canonical expressions", [](Rng& rng, unsigned n) {
                 const auto t = dsl_table();
                 PolyShape sh;
                 sh.max_terms = 6;
                 sh.max_even_degree = 3;
                 for (unsigned i = 0; i < std::max(1000u, 10 * n); ++i) {
                   sh.gaussian = i % 3 == 0;
                   const auto p = random_poly(rng, t, sh);
                   const auto text = p.str();
                   const auto back = parse_poly(text, t);
                   if (back != p || back.str() != text) return mismatch("text " + text, back.str(), text);
                   if (print(parse(text)) != text) return mismatch("syntax tree", print(parse(text)), text);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"expr_io.json_round_trip", 9, "from_json(to_json(e)) = e, bit-exact", [](Rng& rng, unsigned n) {
                 const auto t = dsl_table();
                 PolyShape sh;
                 sh.max_terms = 6;
                 for (unsigned i = 0; i < std::max(1000u, 10 * n); ++i) {
                   sh.gaussian = i % 2 == 0;
                   const auto p = random_poly(rng, t, sh);
                   const auto text = to_json(p).dump();
                   const auto back = from_json(nlohmann::json::parse(text), t);
                   if (back != p) return mismatch("json " + text, back, p);
                   if (to_json(back).dump() != text) return mismatch("json", to_json(back).dump(), text);
                 }
                 return CheckOutcome{};
               }});
  r.push_back({"expr_io.canonical_examples", 9, "canonical printing, nilpotency and [D,D] in supertime", [](Rng&, unsigned) {
                 const auto t = infer_table({"th1*th2 + 2*x"});
                 const std::vector<std::pair<std::string, std::string>> polys = {{"th1*th2 + 2*x", "2*x + th1*th2"},
                                                                                 {"th1*th1", "0"}};
                 for (const auto& [in, out] : polys)
                   if (parse_poly(in, t).str() != out) return mismatch(in, parse_poly(in, t).str(), out);
                 const auto got = to_text(evaluate("[D,D]", DslContext::supertime()));
                 if (got != "-2*d/dt") return mismatch("[D,D]", got, "-2*d/dt");
                 return CheckOutcome{};
               }});
  r.push_back({"expr_io.error_positions", 9, "syntax errors carry line, column and expected tokens", [](Rng&, unsigned) {
                 try {
                   parse("x +\n  * y");
                 } catch (const ParseError& e) {
                   if (e.line() != 2 || e.column() != 3 || e.expected().empty())
                     return CheckOutcome::fail("position " + std::to_string(e.line()) + ":" + std::to_string(e.column()));
                   return CheckOutcome{};
                 }
                 return CheckOutcome::fail("no error for 'x +\\n  * y'");
               }});
}

Registry registry(const std::string& suite, const SuiteOptions& opts) {
  Registry r;
  const bool all = suite == "all";
  if (all || suite == "kernel") kernel_checks(r);
  if (all || suite == "divalg") divalg_checks(r);
  if (all || suite == "superspace") superspace_checks(r);
  if (all || suite == "morphisms") morphism_checks(r);
  if (all || suite == "minkowski") minkowski_checks(r, opts.k);
  if (all || suite == "models") model_checks(r);
  if (all || suite == "expr_io") expr_io_checks(r);
  return r;
}

CheckResult run_check(const Check& c, const SuiteOptions& opts) {
  CheckResult res;
  res.id = c.id;
  res.criterion = c.criterion;
  res.anchor = c.anchor;
  Rng rng(check_seed(opts.seed, c.id));
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  try {
    out = c.fn(rng, opts.cases);
  } catch (const std::exception& e) {
    out = CheckOutcome::fail(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.status = out.ok ? Status::Pass : (c.informational ? Status::Note : Status::Fail);
  res.detail = out.detail;
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernel", "divalg", "superspace", "morphisms",
                                                 "minkowski", "models", "expr_io"};
  return names;
}

unsigned default_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUPERGRASS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto& names = suite_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw PreconditionError("unknown suite '" + name + "'");
  if (opts.k && *opts.k != 1 && *opts.k != 2 && *opts.k != 4 && *opts.k != 8)
    throw PreconditionError("k must be 1, 2, 4 or 8");
  const auto checks = registry(name, opts);
  SuiteReport rep;
  rep.suite = name;
  rep.seed = opts.seed;
  rep.cases = opts.cases;
  rep.checks.resize(checks.size());
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::min<unsigned>(opts.threads ? opts.threads : default_threads(),
                                              static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next++) < checks.size();) rep.checks[i] = run_check(checks[i], opts);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(rep.checks.begin(), rep.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

}  // namespace sg
