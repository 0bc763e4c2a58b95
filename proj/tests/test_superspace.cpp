#include <gtest/gtest.h>

#include "supergrass/random.hpp"
#include "supergrass/superspace.hpp"

using namespace sg;

TEST(Berezin, TopCoefficient) {
  SymbolTable st;
  for (auto n : {"a", "b", "c", "d"}) st.add_even(n);
  st.add_odd("th1");
  st.add_odd("th2");
  auto t = freeze(std::move(st));
  auto v = [&](const char* n) { return SuperPolynomial::variable(t, n); };
  const std::vector<std::uint32_t> th = {t->index("th1"), t->index("th2")};
  const auto f = v("a") + v("b") * v("th1") + v("c") * v("th2") + v("d") * v("th1") * v("th2");
  EXPECT_EQ(berezin(f, th), v("d"));
  EXPECT_EQ(berezin(v("th2") * v("th1"), th), SuperPolynomial::constant(t, Scalar(-1)));
  EXPECT_TRUE(berezin(v("a") + v("th1"), th).is_zero());
}

TEST(Berezin, Box) {
  auto d = SuperDomain::make(1, 2, 0);
  d.box = std::make_pair(Rational(0), Rational(1));
  const auto f = d.th(1) * d.th(2) * d.var("x").pow(2);
  EXPECT_EQ(berezin(d, f).str(), "1/3");
}

TEST(Berezin, TranslationInvariance) {
  auto d = SuperDomain::make(1, 2, 2);
  EXPECT_TRUE(berezin_translation_check(d, d.th(1) * d.th(2), {d.et(1), d.et(2)}));
  auto d1 = SuperDomain::make(0, 1, 1);
  EXPECT_TRUE(berezin_translation_check(d1, d1.th(1), {d1.et(1)}));
  EXPECT_TRUE(berezin(Derivation::partial(d.table, "th1")(d.th(1) * d.th(2)), d.theta).is_zero());
}

TEST(Berezin, TranslationInvarianceRandom) {
  auto d = SuperDomain::make(2, 3, 3);
  Rng rng(7);
  PolyShape sh;
  sh.max_terms = 6;
  sh.max_odd = 5;
  PolyShape zs;
  zs.symbols = d.eta;
  zs.want = Want::Odd;
  for (int i = 0; i < 30; ++i) {
    const auto f = random_poly(rng, d.table, sh);
    std::vector<SuperPolynomial> zeta;
    for (int a = 0; a < 3; ++a) zeta.push_back(random_poly(rng, d.table, zs));
    EXPECT_TRUE(berezin_translation_check(d, f, zeta)) << f.str();
  }
}

TEST(Supertime, Relations) {
  const auto s = supertime();
  const auto th = SuperPolynomial::variable(s.table, "th");
  const auto t = SuperPolynomial::variable(s.table, "t");
  EXPECT_EQ(super_bracket(s.D, s.D), Scalar(-2) * s.dt);
  EXPECT_EQ(super_bracket(s.tau, s.tau), Scalar(2) * s.dt);
  EXPECT_TRUE(super_bracket(s.D, s.tau).images().empty());
  EXPECT_EQ(s.tau - s.D, (Scalar(2) * th) * s.dt);
  // D^2 (f + th g) = -f' - th g'
  const auto f = t.pow(3) + t;
  const auto g = Scalar(2) * t.pow(2);
  EXPECT_EQ(s.D(s.D(f + th * g)), -(s.dt(f)) - th * s.dt(g));
  for (const auto& b : {SuperPolynomial::constant(s.table, Scalar(1)), th, t, t * th})
    EXPECT_EQ(s.tau(s.tau(b)), s.dt(b));
  const auto e1 = SuperPolynomial::variable(s.table, "et1");
  const auto e2 = SuperPolynomial::variable(s.table, "et2");
  EXPECT_TRUE(super_bracket(e1 * s.D, e2 * s.tau).images().empty());
}

TEST(Hinf, Examples) {
  auto d = SuperDomain::make(1, 0, 2);
  const auto x = d.var("x");
  const auto one = SuperPolynomial::constant(d.table, Scalar(1));
  const auto s = d.et(1) * d.et(2);
  EXPECT_EQ(hinf_extend(x.pow(2), d.x, {one + s}), one + Scalar(2) * s);
  EXPECT_EQ(hinf_extend(Scalar(5) * one, d.x, {one + s}), Scalar(5) * one);
  EXPECT_EQ(hinf_extend(x, d.x, {Scalar(3) * one - s}), Scalar(3) * one - s);
}

TEST(Hinf, RingMorphism) {
  auto d = SuperDomain::make(2, 0, 4);
  Rng rng(11);
  PolyShape fs;
  fs.symbols = d.x;
  fs.max_even_degree = 3;
  PolyShape zs;
  zs.symbols = d.eta;
  zs.want = Want::Even;
  zs.max_odd = 4;
  for (int i = 0; i < 20; ++i) {
    const auto f = random_poly(rng, d.table, fs), g = random_poly(rng, d.table, fs);
    std::vector<SuperPolynomial> z = {random_poly(rng, d.table, zs), random_poly(rng, d.table, zs)};
    const auto ef = hinf_extend(f, d.x, z), eg = hinf_extend(g, d.x, z);
    EXPECT_EQ(hinf_extend(f * g, d.x, z), ef * eg);
    std::map<std::uint32_t, SuperPolynomial> sub = {{d.x[0], z[0]}, {d.x[1], z[1]}};
    EXPECT_EQ(ef, f.substitute(sub));
  }
}

TEST(Lift, Examples) {
  auto sp = LiftSpace::make(1, 2);
  const auto x = SuperPolynomial::variable(sp.table, "x");
  const auto s12 = SuperPolynomial::variable(sp.table, "s12");
  const auto f = x.pow(2) + Scalar(3) * x * sp.eta_monomial({1, 2});
  EXPECT_EQ(theta_lift(sp, f), x.pow(2) + Scalar(3) * x * s12);
  EXPECT_EQ(theta_lower(sp, theta_lift(sp, f)), f);
  const auto one = SuperPolynomial::constant(sp.table, Scalar(1));
  EXPECT_EQ(theta_lift(sp, one), one);
  EXPECT_THROW(theta_lift(sp, SuperPolynomial::variable(sp.table, "et1")), ParityError);
}

TEST(Lift, CaseThree) {
  auto sp = LiftSpace::make(1, 4);
  const auto Z = SuperPolynomial::variable(sp.table, "et1") * Derivation::partial(sp.table, "et2");
  const auto f = sp.eta_monomial({2, 3});
  EXPECT_EQ(Z(f), sp.eta_monomial({1, 3}));
  const auto Zl = lift_eta_rotation(sp);
  EXPECT_EQ(theta_lower(sp, Zl(theta_lift(sp, f))), Z(f));
}

TEST(Lift, IdealReductionAgreesAndIsConfluent) {
  auto sp = LiftSpace::make(1, 6);
  Rng rng(3);
  PolyShape sh;
  sh.symbols = sp.s;
  sh.symbols.push_back(sp.x[0]);
  sh.max_even_degree = 3;
  sh.max_terms = 5;
  for (int i = 0; i < 30; ++i) {
    const auto F = random_poly(rng, sp.table, sh);
    const auto r1 = reduce_ideal(sp, F), r2 = reduce_ideal(sp, F, true);
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(theta_lower(sp, F), theta_lower(sp, r1));
  }
}

TEST(Lift, VectorFieldCases) {
  Rng rng(13);
  for (unsigned q : {2u, 4u, 6u}) {
    auto sp = LiftSpace::make(1, q);
    PolyShape sh;
    sh.symbols = sp.s;
    sh.symbols.push_back(sp.x[0]);
    sh.max_even_degree = 3;
    sh.max_terms = 5;
    for (int i = 0; i < 10; ++i) {
      const auto F = random_poly(rng, sp.table, sh);
      for (unsigned c : {1u, 2u, 3u}) {
        const auto out = lift_vector_field_check(sp, c, F);
        EXPECT_TRUE(out.ok) << "q=" << q << " case " << c << ": " << out.detail;
      }
    }
  }
  EXPECT_THROW(lift_vector_field_check(LiftSpace::make(1, 1), 2, SuperPolynomial(LiftSpace::make(1, 1).table)),
               PreconditionError);
}
