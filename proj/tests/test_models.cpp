#include <gtest/gtest.h>

#include "supergrass/models.hpp"

using namespace sg;

TEST(JetSpace, TotalDerivativeAndTruncation) {
  JetSpace::Layout l;
  l.coords = {"t", "x"};
  l.fields = {{"u", Parity::Even}};
  l.order = 2;
  const auto js = JetSpace::make(l);
  const auto u = js.jet("u");
  EXPECT_EQ(js.total("t")(u * u), Scalar(2) * u * js.jet("u", "t"));
  EXPECT_EQ(js.total("x")(js.jet("u", "t")), js.jet("u", "tx"));
  EXPECT_EQ(js.total("t")(js.var("t")), js.constant(Scalar(1)));
  EXPECT_THROW(js.total("t")(js.jet("u", "tx")), UnsupportedError);
  EXPECT_THROW(js.jet("u", "ttt"), UnsupportedError);
}

TEST(JetSpace, WaveEquation) {
  JetSpace::Layout l;
  l.coords = {"t", "x"};
  l.fields = {{"phi", Parity::Even}};
  const auto js = JetSpace::make(l);
  const auto pt = js.jet("phi", "t"), px = js.jet("phi", "x");
  const auto L = Scalar(Rational(1, 2)) * (pt * pt - px * px);
  EXPECT_EQ(js.euler(L, "phi"), -js.jet("phi", "tt") + js.jet("phi", "xx"));
}

TEST(JetSpace, IntegrationByParts) {
  JetSpace::Layout l;
  l.coords = {"t"};
  l.fields = {{"u", Parity::Even}, {"chi", Parity::Even}};
  l.order = 3;
  const auto js = JetSpace::make(l);
  const auto u = js.jet("u"), chi = js.jet("chi");
  // chi_t u^2 ~ -2 chi u u_t
  EXPECT_EQ(js.integrate_by_parts(js.jet("chi", "t") * u * u, "chi"), Scalar(-2) * chi * u * js.jet("u", "t"));
  EXPECT_EQ(js.integrate_by_parts(js.jet("chi", "tt") * u, "chi"), chi * js.jet("u", "tt"));
  EXPECT_THROW(js.integrate_by_parts(chi * chi, "chi"), PreconditionError);
}

TEST(Superparticle, Expansion) {
  for (unsigned n : {1u, 2u, 3u}) {
    const auto c = superparticle_expansion_check(n);
    EXPECT_TRUE(c.ok) << n << ": " << c.detail;
  }
}

TEST(Superparticle, PlainVariation) {
  for (unsigned n : {1u, 3u}) {
    const auto c = plain_variation_check(n);
    EXPECT_TRUE(c.ok) << c.detail;
  }
}

TEST(Superparticle, ModulatedVariationAndCharge) {
  const auto mv = modulated_variation(2);
  EXPECT_TRUE(mv.outcome.ok) << mv.outcome.detail;
  // The two-term bracket formula evaluates to the opposite sign.
  EXPECT_FALSE(mv.intermediate_agrees);
  EXPECT_EQ(mv.intermediate, -mv.delta1);
}

TEST(Superparticle, SupersymmetryAlgebra) {
  const auto c = susy_algebra_check(2);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Superparticle, EquationsOfMotion) {
  const auto c = superparticle_el_check(2);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(SigmaModel, Expansion) {
  const auto c = sigma_expansion_check();
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(SigmaModel, ActionSymbolicSuperpotential) {
  const auto m = SigmaModel::make();
  for (unsigned d = 0; d <= 4; ++d) {
    const auto c = sigma_action_check(m, m.symbolic_h(d));
    EXPECT_TRUE(c.ok) << "degree " << d << ": " << c.detail;
  }
  EXPECT_THROW(m.symbolic_h(5), UnsupportedError);
}

TEST(SigmaModel, EulerLagrange) {
  const auto m = SigmaModel::make();
  for (unsigned d : {0u, 2u, 4u}) {
    const auto c = sigma_el_check(m, m.symbolic_h(d));
    EXPECT_TRUE(c.ok) << "degree " << d << ": " << c.detail;
  }
  // h linear: the boson is free.
  const auto h = m.rational_h({Rational(0), Rational(3)});
  const auto el = sigma_euler_lagrange(m, h);
  const auto& js = m.jets();
  const std::map<std::uint32_t, SuperPolynomial> aux = {{js.jet_symbol("F", {0, 0, 0}), js.constant(Scalar(-3))}};
  EXPECT_EQ(el.e_phi.substitute(aux), -(js.jet("phi", "tt") - js.jet("phi", "xx") - js.jet("phi", "yy")));
}

TEST(SigmaModel, TrigReduce) {
  const auto m = SigmaModel::make();
  const auto& js = m.jets();
  const auto c = js.var("c"), s = js.var("s");
  const auto& tab = js.table();
  const auto one = js.constant(Scalar(1));
  EXPECT_EQ(trig_reduce(s * s * s, tab->index("c"), tab->index("s")), s - c * c * s);
  EXPECT_EQ(trig_reduce(c * c + s * s, tab->index("c"), tab->index("s")), one);
}

TEST(SigmaModel, BPS) {
  const auto m = SigmaModel::make();
  for (unsigned d : {2u, 3u, 4u}) {
    const auto c = bps_check(m, m.symbolic_h(d));
    EXPECT_TRUE(c.ok) << "degree " << d << ": " << c.detail;
  }
  // phi^4 kink potential h' = 1 - phi^2
  const auto c = bps_check(m, m.rational_h({Rational(0), Rational(1), Rational(0), Rational(-1, 3)}));
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(SigmaModel, Bogomolnyi) {
  const auto m = SigmaModel::make();
  const auto c = bogomolnyi_check(m, m.symbolic_h(4));
  EXPECT_TRUE(c.ok) << c.detail;
}
