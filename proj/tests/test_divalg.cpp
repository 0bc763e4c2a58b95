#include <gtest/gtest.h>

#include "supergrass/divalg.hpp"

using namespace sg;

namespace {

using E = DAElement<Rational>;

E u(DivAlg a, unsigned one_based) { return E::unit(a, one_based - 1, Rational(1)); }

}  // namespace

TEST(DivAlg, QuaternionIJ) { EXPECT_EQ(u(DivAlg::H, 2) * u(DivAlg::H, 3), u(DivAlg::H, 4)); }

TEST(DivAlg, OctonionPairsGiveU2) {
  const auto O = DivAlg::O;
  EXPECT_EQ(u(O, 1) * u(O, 2), u(O, 2));
  EXPECT_EQ(u(O, 3) * u(O, 4), u(O, 2));
  EXPECT_EQ(u(O, 6) * u(O, 7), u(O, 2));
  EXPECT_EQ(u(O, 8) * u(O, 5), u(O, 2));
}

TEST(DivAlg, ConjugationAndNorm) {
  EXPECT_EQ(u(DivAlg::C, 2).conj(), -u(DivAlg::C, 2));
  EXPECT_EQ(norm_sq(u(DivAlg::C, 1) + u(DivAlg::C, 2)), Rational(2));
  EXPECT_EQ((u(DivAlg::O, 3) * u(DivAlg::O, 4).conj()).re(), Rational(0));
}

TEST(DivAlg, BasisClosure) {
  for (auto a : {DivAlg::R, DivAlg::C, DivAlg::H, DivAlg::O})
    for (unsigned x = 1; x <= dim(a); ++x) {
      EXPECT_EQ(u(a, x) * u(a, x).conj(), u(a, 1));
      for (unsigned y = 1; y <= dim(a); ++y) {
        const auto p = basis_product(a, x - 1, y - 1);
        EXPECT_TRUE(p.sign == 1 || p.sign == -1);
      }
    }
}

TEST(DivAlg, OctonionAlternativeOnBasis) {
  const auto O = DivAlg::O;
  for (unsigned x = 1; x <= 8; ++x)
    for (unsigned y = 1; y <= 8; ++y)
      for (unsigned z = 1; z <= 8; ++z) {
        const E a = u(O, x) + u(O, y);
        const E b = u(O, z) - Rational(2) * u(O, x);
        EXPECT_EQ((a * a) * b, a * (a * b));
        EXPECT_EQ((b * a) * a, b * (a * a));
      }
}

TEST(DivAlg, GammaConstants) {
  auto gr = gamma_constants(DivAlg::R);
  EXPECT_EQ(gr[0][0][0], 0);
  auto gc = gamma_constants(DivAlg::C);
  // (u1 conj(u2) - u2 conj(u1))/2 = -u2
  EXPECT_EQ(gc[0][1][1], -1);
  EXPECT_EQ(gc[1][0][1], 1);
  for (auto a : {DivAlg::C, DivAlg::H, DivAlg::O}) {
    const auto g = gamma_constants(a);
    const unsigned k = dim(a);
    for (unsigned x = 0; x < k; ++x)
      for (unsigned y = 0; y < k; ++y) {
        EXPECT_EQ(g[x][y][0], 0);
        E lhs = u(a, x + 1) * u(a, y + 1).conj() - u(a, y + 1) * u(a, x + 1).conj();
        E rhs(a);
        for (unsigned c = 0; c < k; ++c) {
          EXPECT_EQ(g[x][y][c], -g[y][x][c]);
          rhs[c] = 2 * g[x][y][c];
        }
        EXPECT_EQ(lhs, rhs);
      }
  }
  auto gh = gamma_constants(DivAlg::H);
  EXPECT_EQ(gh[1][2][3], -1);  // (i conj j - j conj i)/2 = -k
}

TEST(DivAlg, CliffordIsComplex) { EXPECT_TRUE(clifford_complex_check()); }

TEST(DivAlg, TagMismatch) {
  EXPECT_THROW(u(DivAlg::C, 1) * u(DivAlg::H, 1), PreconditionError);
  EXPECT_THROW(divalg_from_dim(3), PreconditionError);
}
