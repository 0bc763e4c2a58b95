#include <gtest/gtest.h>

#include "supergrass/derivation.hpp"
#include "supergrass/superpoly.hpp"

using namespace sg;

namespace {

struct Grassmann {
  TablePtr t;
  Grassmann() {
    SymbolTable s;
    s.add_even("x");
    s.add_even("t");
    s.add_odd("th1");
    s.add_odd("th2");
    s.add_odd("et1");
    s.add_odd("et2");
    s.add_clifford("eps", Rational(1));
    s.add_even("a");
    s.add_even("b");
    s.add_even("c");
    s.add_even("d");
    t = freeze(std::move(s));
  }
  SuperPolynomial v(const std::string& n) const { return SuperPolynomial::variable(t, n); }
  SuperPolynomial c(long k) const { return SuperPolynomial::constant(t, Scalar(k)); }
};

}  // namespace

TEST(Kernel, TranspositionSign) {
  Grassmann g;
  EXPECT_EQ(g.v("et2") * g.v("et1"), -(g.v("et1") * g.v("et2")));
  EXPECT_EQ((g.v("et2") * g.v("et1")).str(), "-et1*et2");
}

TEST(Kernel, OddGeneratorsAreNilpotent) {
  Grassmann g;
  EXPECT_TRUE((g.v("th1") * g.v("th1")).is_zero());
}

TEST(Kernel, CliffordSquare) {
  Grassmann g;
  EXPECT_EQ(g.v("eps") * g.v("eps"), g.c(-1));
}

TEST(Kernel, CliffordComplexProduct) {
  Grassmann g;
  const auto e = g.v("eps");
  const auto a = g.v("a"), b = g.v("b"), c = g.v("c"), d = g.v("d");
  EXPECT_EQ((a + b * e) * (c + d * e), (a * c - b * d) + (a * d + b * c) * e);
}

TEST(Kernel, CliffordAnticommutesWithOdd) {
  Grassmann g;
  EXPECT_EQ(g.v("eps") * g.v("et1"), -(g.v("et1") * g.v("eps")));
}

TEST(Kernel, TableMismatch) {
  Grassmann g1, g2;
  SymbolTable other;
  other.add_even("y");
  auto t = freeze(std::move(other));
  EXPECT_THROW(g1.v("x") * SuperPolynomial::variable(t, "y"), TableMismatchError);
  // Same content counts as the same table.
  EXPECT_NO_THROW(g1.v("x") * g2.v("x"));
}

TEST(Kernel, OddPartials) {
  Grassmann g;
  const auto d1 = Derivation::partial(g.t, "th1");
  const auto d2 = Derivation::partial(g.t, "th2");
  const auto f = g.v("th1") * g.v("th2");
  EXPECT_EQ(d2(f), -g.v("th1"));
  EXPECT_EQ(d1(f), g.v("th2"));
}

TEST(Kernel, EvenPartialIgnoresOddPart) {
  Grassmann g;
  const auto dx = Derivation::partial(g.t, "x");
  EXPECT_EQ(dx(g.v("x").pow(2) * g.v("th1")), g.c(2) * g.v("x") * g.v("th1"));
}

TEST(Kernel, SupertimeBrackets) {
  SymbolTable s;
  s.add_even("t");
  s.add_odd("th");
  auto t = freeze(std::move(s));
  const auto th = SuperPolynomial::variable(t, "th");
  const auto dt = Derivation::partial(t, "t");
  const auto dth = Derivation::partial(t, "th");
  const Derivation D = dth - th * dt;
  const Derivation tau = dth + th * dt;
  EXPECT_EQ(super_bracket(D, D), Scalar(-2) * dt);
  EXPECT_EQ(super_bracket(D, D).str(), "-2*d/dt");
  EXPECT_EQ(super_bracket(tau, tau), Scalar(2) * dt);
  EXPECT_TRUE(super_bracket(D, tau).images().empty());
  EXPECT_TRUE(jacobi_check(D, tau, dt));
}

TEST(Kernel, EvenSelfBracketVanishes) {
  Grassmann g;
  const auto dx = Derivation::partial(g.t, "x");
  EXPECT_TRUE(super_bracket(dx, dx).images().empty());
}

TEST(Kernel, InhomogeneousBracketThrows) {
  Grassmann g;
  Derivation mixed(g.t, Parity::Even);
  mixed.set_image(g.t->index("x"), g.c(1) + g.v("th1"));
  EXPECT_THROW(super_bracket(mixed, mixed), ParityError);
}

TEST(Kernel, TensoringTrick) {
  Grassmann g;
  const auto x = g.v("x");
  const auto th1 = g.v("th1"), th2 = g.v("th2");
  const Derivation X = Derivation::partial(g.t, "th1") - th1 * Derivation::partial(g.t, "x");
  const Derivation Y = Derivation::partial(g.t, "th2") + x * th2 * Derivation::partial(g.t, "x");
  const Derivation A = g.v("et1") * X;
  const Derivation B = g.v("et2") * Y;
  // A, B are even, so the super bracket is the ordinary commutator.
  const Derivation lhs = super_bracket(A, B);
  const Derivation rhs = (-(g.v("et1") * g.v("et2"))) * super_bracket(X, Y);
  EXPECT_EQ(lhs, rhs);
}

TEST(Kernel, CartanOneDimensional) {
  auto forms = forms_table(1);
  const auto one = SuperPolynomial::constant(forms, Scalar(1));
  auto ct = cartan_triple(forms, {one});
  const auto x = SuperPolynomial::variable(forms, "x1");
  const auto dx = SuperPolynomial::variable(forms, "dx1");
  EXPECT_EQ(ct.lie(x * dx), dx);
  EXPECT_TRUE(super_bracket(ct.d, ct.d).images().empty());
  EXPECT_TRUE(super_bracket(ct.iota, ct.iota).images().empty());
}

TEST(Kernel, CartanIdentitiesPolynomialField) {
  auto forms = forms_table(2);
  const auto x1 = SuperPolynomial::variable(forms, "x1");
  const auto x2 = SuperPolynomial::variable(forms, "x2");
  auto ct = cartan_triple(forms, {x1 * x2, x1.pow(2) - x2});
  std::vector<std::uint32_t> all;
  for (std::uint32_t i = 0; i < forms->size(); ++i) all.push_back(i);
  EXPECT_TRUE(super_bracket(ct.lie, ct.d, all).images().empty());
  EXPECT_TRUE(super_bracket(ct.lie, ct.iota, all).images().empty());
  // Lie_xi(x1) = xi^1.
  EXPECT_EQ(ct.lie(x1), x1 * x2);
}

TEST(Kernel, CartanZeroField) {
  auto forms = forms_table(2);
  SuperPolynomial z(forms);
  auto ct = cartan_triple(forms, {z, z});
  EXPECT_TRUE(ct.lie.images().empty());
}

TEST(Kernel, CartanRejectsNonPolynomial) {
  auto forms = forms_table(1);
  EXPECT_THROW(cartan_triple(forms, {SuperPolynomial::variable(forms, "dx1")}), UnsupportedError);
}

TEST(Kernel, TopMonomialNonzeroAndPrinting) {
  Grassmann g;
  const auto top = g.v("th1") * g.v("th2") * g.v("et1") * g.v("et2");
  EXPECT_FALSE(top.is_zero());
  EXPECT_EQ((g.v("th1") * g.v("th2") + g.c(2) * g.v("x")).str(), "2*x + th1*th2");
}

TEST(Kernel, GaussianPromotion) {
  Grassmann g;
  const auto p = Scalar::I() * g.v("x");
  EXPECT_EQ(p.ring(), ScalarRing::GaussianRationals);
  EXPECT_EQ((p * p), -(g.v("x").pow(2)));
}
