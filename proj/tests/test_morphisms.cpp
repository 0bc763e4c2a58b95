#include <gtest/gtest.h>

#include "supergrass/morphisms.hpp"
#include "supergrass/random.hpp"

using namespace sg;

namespace {

Derivation field(const MorphismSpace& sp, std::vector<SuperPolynomial> coeffs) {
  Derivation d(sp.table, Parity::Even);
  for (std::size_t i = 0; i < sp.y.size(); ++i) d.set_image(sp.y[i], coeffs.at(i));
  return d;
}

}  // namespace

TEST(Morphism, CollapseFromPoint) {
  auto sp = MorphismSpace::make(0, 0, 0, 0, 2);
  FleshMorphism f;
  f.space = sp;
  f.chi = {SuperPolynomial(sp.table), SuperPolynomial(sp.table)};
  const auto one = SuperPolynomial::constant(sp.table, Scalar(1));
  EXPECT_EQ(f.pullback(one), one);
  EXPECT_TRUE(f.pullback(sp.var(sp.psi[0]) * sp.var(sp.psi[1])).is_zero());
  EXPECT_TRUE(f.pullback(sp.var(sp.psi[1])).is_zero());
}

TEST(Morphism, SimpleExponential) {
  auto sp = MorphismSpace::make(1, 0, 2, 1, 0);
  FleshMorphism f;
  f.space = sp;
  f.phi = {sp.var(sp.x[0])};
  f.xi[{1, 2}] = field(sp, {SuperPolynomial::constant(sp.table, Scalar(1))});
  const auto y = sp.var(sp.y[0]), x = sp.var(sp.x[0]);
  EXPECT_EQ(f.pullback(y.pow(2)), x.pow(2) + Scalar(2) * x * sp.odd_monomial({1, 2}));
  EXPECT_EQ(f.pullback(SuperPolynomial::constant(sp.table, Scalar(1))), SuperPolynomial::constant(sp.table, Scalar(1)));
  EXPECT_TRUE(morphism_check(f, y, y).ok);
}

TEST(Morphism, RandomInstancesAreMorphisms) {
  Rng rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    auto sp = MorphismSpace::make(2, 2, 2, 2, 1);
    FleshMorphism f;
    f.space = sp;
    PolyShape xs;
    xs.symbols = sp.x;
    xs.max_even_degree = 3;
    PolyShape ys;
    ys.symbols = sp.y;
    PolyShape odd;
    odd.symbols = sp.odd_source();
    odd.symbols.insert(odd.symbols.end(), sp.x.begin(), sp.x.end());
    odd.want = Want::Odd;
    for (int i = 0; i < 2; ++i) f.phi.push_back(random_poly(rng, sp.table, xs));
    f.chi.push_back(random_poly(rng, sp.table, odd));
    f.xi[{1, 3}] = field(sp, {random_poly(rng, sp.table, ys), random_poly(rng, sp.table, ys)});
    f.xi[{2, 4}] = field(sp, {random_poly(rng, sp.table, ys), random_poly(rng, sp.table, ys)});
    f.xi[{1, 2, 3, 4}] = field(sp, {random_poly(rng, sp.table, ys), random_poly(rng, sp.table, ys)});
    PolyShape fs;
    fs.symbols = sp.y;
    fs.symbols.insert(fs.symbols.end(), sp.psi.begin(), sp.psi.end());
    fs.max_even_degree = 3;
    const auto a = random_poly(rng, sp.table, fs), b = random_poly(rng, sp.table, fs);
    const auto out = morphism_check(f, a, b);
    EXPECT_TRUE(out.ok) << out.detail;
  }
}

TEST(Morphism, OddLengthIndexIsDetected) {
  auto sp = MorphismSpace::make(1, 0, 2, 1, 1);
  FleshMorphism f;
  f.space = sp;
  f.phi = {sp.var(sp.x[0])};
  f.chi = {sp.var(sp.eta[1])};
  f.xi[{1}] = field(sp, {SuperPolynomial::constant(sp.table, Scalar(1))});
  const auto y = sp.var(sp.y[0]);
  EXPECT_FALSE(morphism_check(f, y, sp.var(sp.psi[0])).ok);
}

TEST(Morphism, PointTangent) {
  auto p = PointTangent::make({Rational(2)}, {Rational(3)});
  const auto y = SuperPolynomial::variable(p.table, "y");
  const auto th = SuperPolynomial::variable(p.table, "th");
  EXPECT_EQ(p.pullback(y.pow(2)), SuperPolynomial::constant(p.table, Scalar(4)) + Scalar(12) * th);
  EXPECT_EQ(p.pullback(y) * p.pullback(y), p.pullback(y.pow(2)));
  EXPECT_EQ(p.pullback(SuperPolynomial::constant(p.table, Scalar(7))), SuperPolynomial::constant(p.table, Scalar(7)));
  const auto chk = morphism_check([&](const SuperPolynomial& f) { return p.pullback(f); }, p.table, y.pow(3) - y,
                                  y.pow(2), Scalar(1), Scalar(5), false);
  EXPECT_TRUE(chk.ok) << chk.detail;
}

TEST(Morphism, OddPlane) {
  const std::vector<Rational> p = {Rational(1), Rational(-1)};
  EXPECT_FALSE(odd_plane_obstruction(p, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}));
  EXPECT_TRUE(odd_plane_obstruction(p, {Rational(1), Rational(2)}, {Rational(2), Rational(4)}));
  EXPECT_TRUE(odd_plane_obstruction(p, {Rational(0), Rational(0)}, {Rational(3), Rational(1)}));
}

TEST(Morphism, FactorizationOneOdd) {
  auto sp = MorphismSpace::make(1, 1, 2, 1, 0);
  FleshMorphism f;
  f.space = sp;
  f.phi = {sp.var(sp.x[0])};
  const auto c = [&](long v) { return SuperPolynomial::constant(sp.table, Scalar(v)); };
  f.xi[{2, 3}] = field(sp, {c(1)});
  f.xi[{1, 2}] = field(sp, {c(2)});
  f.xi[{1, 3}] = field(sp, {c(-1)});
  const auto fr = factorize(f);
  ASSERT_TRUE(fr.form.has_value());
  EXPECT_EQ(fr.form->parts.size(), 1u);
  const auto y = sp.var(sp.y[0]);
  for (const auto& g : {y, y.pow(2), y.pow(3) - y}) EXPECT_EQ(fr.form->pullback(g), f.pullback(g));
}

TEST(Morphism, FactorizationTwoOdd) {
  auto sp = MorphismSpace::make(1, 2, 2, 1, 0);
  FleshMorphism f;
  f.space = sp;
  f.phi = {sp.var(sp.x[0])};
  const auto c = [&](long v) { return SuperPolynomial::constant(sp.table, Scalar(v)); };
  f.xi[{1, 2}] = field(sp, {c(1)});
  f.xi[{1, 3}] = field(sp, {c(2)});
  f.xi[{2, 4}] = field(sp, {c(3)});
  f.xi[{3, 4}] = field(sp, {c(5)});
  const auto fr = factorize(f);
  ASSERT_TRUE(fr.form.has_value());
  EXPECT_EQ(fr.form->parts.size(), 3u);  // A = {1}, {1,2}, {2}
  const auto y = sp.var(sp.y[0]);
  EXPECT_EQ(fr.form->pullback(y.pow(4)), f.pullback(y.pow(4)));
}

TEST(Morphism, FactorizationObstruction) {
  auto sp = MorphismSpace::make(1, 0, 4, 1, 0);
  FleshMorphism f;
  f.space = sp;
  f.phi = {sp.var(sp.x[0])};
  const auto y = sp.var(sp.y[0]);
  f.xi[{1, 2}] = field(sp, {y});
  f.xi[{3, 4}] = field(sp, {y.pow(2)});
  const auto fr = factorize(f);
  EXPECT_FALSE(fr.form.has_value());
  EXPECT_NE(fr.obstruction.find("xi_12"), std::string::npos);
}

TEST(Morphism, ComponentsAndNonlinearExpansion) {
  auto sp = MorphismSpace::make(1, 2, 0, 2, 0);
  FleshMorphism f;
  f.space = sp;
  const auto x = sp.var(sp.x[0]);
  f.phi = {x, x.pow(2)};
  const auto c = [&](long v) { return SuperPolynomial::constant(sp.table, Scalar(v)); };
  const auto y1 = sp.var(sp.y[0]), y2 = sp.var(sp.y[1]);
  f.xi[{1, 2}] = field(sp, {c(1), c(-2)});
  EXPECT_FALSE(chart_violation(f).has_value());
  const auto comps = component_fields(f);
  EXPECT_EQ(comps[0].at({}), x);
  EXPECT_EQ(comps[0].at({1, 2}), c(1));
  EXPECT_TRUE(nonlinear_expansion_check(f, y1 * y2));
  EXPECT_TRUE(nonlinear_expansion_check(f, y1.pow(3) + y2));
}

TEST(Morphism, NonlinearCrossTermWithFlesh) {
  auto sp = MorphismSpace::make(1, 2, 2, 2, 0);
  FleshMorphism f;
  f.space = sp;
  const auto x = sp.var(sp.x[0]);
  f.phi = {x, Scalar(3) * x};
  const auto c = [&](long v) { return SuperPolynomial::constant(sp.table, Scalar(v)); };
  f.xi[{1, 3}] = field(sp, {c(1), c(0)});
  f.xi[{2, 4}] = field(sp, {c(0), c(1)});
  f.xi[{1, 4}] = field(sp, {c(0), c(2)});
  const auto y1 = sp.var(sp.y[0]), y2 = sp.var(sp.y[1]);
  const auto comps = component_fields(f);
  // f = y1 y2: the th1 th2 coefficient carries -(psi_1^1 psi_2^2 + psi_1^2 psi_2^1).
  const auto rhs = nonlinear_expansion(f, y1 * y2);
  EXPECT_EQ(f.pullback(y1 * y2), rhs);
  const auto cross = -(comps[0].at({1}) * comps[1].at({2}) + comps[1].at({1}) * comps[0].at({2}));
  EXPECT_FALSE(cross.is_zero());
  const auto top = f.pullback(y1 * y2).left_cofactor(sp.theta);
  EXPECT_EQ(top, cross);
}

TEST(Morphism, BareShift) {
  auto sp = MorphismSpace::make(1, 2, 2, 1, 0);
  FleshMorphism f;
  f.space = sp;
  const auto x = sp.var(sp.x[0]);
  f.phi = {x};
  const auto y = sp.var(sp.y[0]);
  f.xi[{3, 4}] = field(sp, {SuperPolynomial::constant(sp.table, Scalar(1))});
  const auto comps = component_fields(f);
  std::map<std::uint32_t, SuperPolynomial> sub = {{sp.y[0], x}};
  EXPECT_EQ(comps[0].at({}), (y + f.xi.at({3, 4}).image(sp.y[0]) * sp.odd_monomial({3, 4})).substitute(sub));
}

TEST(Morphism, OneOddSourceReading) {
  auto sp = MorphismSpace::make(1, 1, 2, 1, 0);
  FleshMorphism f;
  f.space = sp;
  const auto x = sp.var(sp.x[0]);
  f.phi = {x};
  const auto y = sp.var(sp.y[0]);
  f.xi[{2, 3}] = field(sp, {y});
  f.xi[{1, 2}] = field(sp, {Scalar(3) * y});
  const auto comps = component_fields(f);
  const auto fr = factorize(f);
  ASSERT_TRUE(fr.form.has_value());
  std::map<std::uint32_t, SuperPolynomial> sub = {{sp.y[0], x}};
  auto expo = [&](const SuperPolynomial& g) {
    SuperPolynomial total = g, term = g;
    Rational fact(1);
    for (unsigned n = 1; !term.is_zero(); ++n) {
      term = fr.form->xi_empty(term);
      fact *= n;
      total += term * Scalar(Rational(1) / fact);
    }
    return total;
  };
  EXPECT_EQ(comps[0].at({}), expo(y).substitute(sub));
  EXPECT_EQ(comps[0].at({1}), expo(fr.form->parts[0].second(y)).substitute(sub));
}
