#include <gtest/gtest.h>

#include "supergrass/minkowski.hpp"
#include "supergrass/sl4c.hpp"

using namespace sg;

namespace {

const DivAlg kAll[] = {DivAlg::R, DivAlg::C, DivAlg::H, DivAlg::O};

KRational k(DivAlg tag, std::vector<long> c) {
  KRational e(tag, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) e[static_cast<unsigned>(i)] = Rational(c[i]);
  return e;
}

}  // namespace

TEST(NilMatrix, SquareOfSupercharge) {
  const auto r = MatrixRing::make(DivAlg::R);
  const auto q = q_basis(r, 1, 1);
  // eps * eps = -1, so Q^2 = -X_11.
  EXPECT_EQ(q * q, -x_matrix(r, 1, 1));
  EXPECT_EQ(anticomm(q, q), Scalar(-2) * re_matrix(r, 1, 1));
  EXPECT_THROW(anticomm(NilMatrix5::identity(r), q), PreconditionError);
}

TEST(NilMatrix, BracketRelationsAllAlgebras) {
  for (auto tag : kAll) {
    const auto c = supercharge_bracket_check(tag);
    EXPECT_TRUE(c.ok) << name(tag) << ": " << c.detail;
  }
}

TEST(NilMatrix, Centrality) {
  for (auto tag : kAll) {
    const auto c = centrality_check(tag);
    EXPECT_TRUE(c.ok) << name(tag) << ": " << c.detail;
  }
}

TEST(SuperTranslation, GroupLaw) {
  for (auto tag : kAll) {
    const auto c = group_law_check(tag, 2);
    EXPECT_TRUE(c.ok) << name(tag) << ": " << c.detail;
  }
}

TEST(SuperTranslation, ExplicitProduct) {
  const auto r = MatrixRing::make(DivAlg::R, 2);
  const auto e1 = r.var(r.eta[0]), e2 = r.var(r.eta[1]);
  const auto zero = SuperPolynomial(r.table);
  const auto th = odd_translation(r, {{e1}, {zero}});
  const auto ps = odd_translation(r, {{zero}, {e2}});
  // [Th, Ps]/2 = eta1 eta2 R_(12)
  EXPECT_EQ(Scalar(Rational(1, 2)) * commutator(th, ps), (e1 * e2) * re_matrix(r, 1, 2));
  EXPECT_THROW(odd_translation(r, {{e1 * e2}, {zero}}), ParityError);
  EXPECT_THROW(even_translation(r, e1, zero, zero, {}), ParityError);
}

TEST(SuperTranslation, EvenCoordinatesGiveHermitianBlock) {
  const auto r = MatrixRing::make(DivAlg::C);
  const auto c = [&](long v) { return r.poly(Scalar(v)); };
  // t = 5, x = 1, z = 2 + 3 u2
  const auto V = even_translation(r, c(3), c(2), c(2), {c(3)});
  const auto h = Hermitian2::from_txz(DivAlg::C, Rational(5), Rational(1), k(DivAlg::C, {2, 3}));
  EXPECT_EQ(V(1, 4), r.lift(to_number(k(DivAlg::C, {3}))));
  EXPECT_EQ(V(1, 5), r.lift(to_number(h.z)));
  EXPECT_EQ(4 * h.det(), minkowski_norm(Rational(5), Rational(1), k(DivAlg::C, {2, 3})));
}

TEST(NullVector, Examples) {
  EXPECT_TRUE(null_vector_check(DivAlg::R, k(DivAlg::R, {2}), k(DivAlg::R, {-3})).ok);
  EXPECT_TRUE(null_vector_check(DivAlg::H, k(DivAlg::H, {1, 2, 0, -1}), k(DivAlg::H, {0, 1, 3, 1})).ok);
  EXPECT_TRUE(null_vector_check(DivAlg::O, k(DivAlg::O, {1, 0, 2, 0, 0, 1, 0, 3}),
                                k(DivAlg::O, {0, 1, 0, 0, 2, 0, -1, 1}))
                  .ok);
  const auto h = null_vector(DivAlg::C, k(DivAlg::C, {1, 1}), k(DivAlg::C, {0, 0}));
  EXPECT_EQ(h.a, 2);
  EXPECT_EQ(h.d, 0);
  EXPECT_EQ(h.t(), 2);
}

TEST(NullVector, RSymmetry) {
  EXPECT_TRUE(r_symmetry_check(DivAlg::C, k(DivAlg::C, {1, 2})).ok);
  EXPECT_TRUE(r_symmetry_check(DivAlg::H, k(DivAlg::H, {1, 1, -1, 2})).ok);
  EXPECT_THROW(r_symmetry_check(DivAlg::O, k(DivAlg::O, {1})), UnsupportedError);
}

TEST(Lorentz, Table) {
  for (auto tag : kAll) {
    const auto c = lorentz_table_check(tag);
    EXPECT_TRUE(c.ok) << name(tag) << ": " << c.detail;
  }
  for (unsigned kk : {1u, 2u, 4u, 8u}) EXPECT_TRUE(rotation_from_boosts_check(kk).ok);
}

TEST(Lorentz, ClosureDimensions) {
  EXPECT_EQ(lorentz_closure_dim(DivAlg::R), 3u);
  EXPECT_EQ(lorentz_closure_dim(DivAlg::C), 6u);
  EXPECT_EQ(lorentz_closure_dim(DivAlg::H), 15u);
  EXPECT_EQ(lorentz_closure_dim(DivAlg::O), 45u);
}

TEST(Lorentz, Conjugation) {
  EXPECT_TRUE(lorentz_conjugation_check(DivAlg::R).ok);
  EXPECT_TRUE(lorentz_conjugation_check(DivAlg::C).ok);
  const auto h = Hermitian2::from_txz(DivAlg::H, Rational(1), Rational(0), k(DivAlg::H, {0}));
  KMat2 g = hermitian_basis(DivAlg::H, 0);
  EXPECT_THROW(lorentz_conjugate(g, h), UnsupportedError);
}

TEST(Lorentz, RhoRejectsTrace) {
  const auto one = k(DivAlg::R, {1});
  EXPECT_THROW(rho(kmat2(DivAlg::R, one, one, one, one)), PreconditionError);
}

TEST(InvariantFields, Brackets) {
  for (auto tag : kAll) {
    const auto c = invariant_fields_check(tag);
    EXPECT_TRUE(c.ok) << name(tag) << ": " << c.detail;
  }
}

TEST(Specialization, RealDictionary) {
  const auto c = real_dictionary_check();
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Specialization, Chiral) {
  const auto c = chiral_check();
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Reduction, QuaternionAndOctonion) {
  for (auto tag : {DivAlg::H, DivAlg::O}) {
    const auto c = reduction_check(tag);
    EXPECT_TRUE(c.ok) << name(tag) << ": " << c.detail;
  }
  EXPECT_THROW(reduction_pairs(DivAlg::C), UnsupportedError);
}

// SL(4,C) bridge ---------------------------------------------------------------

TEST(Bridge, BasisVector) {
  const C4 u = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  const auto y = wedge(u, sigma(u));
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(y[n], n == biv_index(1, 3) ? Scalar(1) : Scalar(0));
  const auto h = P_inverse(y);
  EXPECT_EQ(h.a, 1);
  EXPECT_EQ(h.d, 0);
  EXPECT_TRUE(bridge_check(u).ok);
}

TEST(Bridge, RandomIdentities) {
  Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    const auto u = random_c4(rng), v = random_c4(rng);
    auto c = bridge_check(u);
    EXPECT_TRUE(c.ok) << c.detail;
    c = polarization_check(u, v);
    EXPECT_TRUE(c.ok) << c.detail;
    c = coordinate_table_check(u);
    EXPECT_TRUE(c.ok) << c.detail;
  }
}

TEST(Bridge, DerivativeDictionary) {
  const auto c = derivative_dictionary_check();
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Bridge, WedgeForm) {
  // Y^Y = 2(y12 y34 - y13 y24 + y14 y23) e1234.
  Bivector y;
  for (unsigned n = 0; n < 6; ++n) y[n] = Scalar(static_cast<long>(n + 1));
  EXPECT_EQ(bilinear_B(y, y), Scalar(2 * (1 * 6 - 2 * 5 + 3 * 4)));
  EXPECT_THROW(P_inverse(y), PreconditionError);
}

TEST(Bridge, FormFactor) {
  Rng rng(10);
  for (int i = 0; i < 10; ++i) {
    const Rational t = rng.rational(), x = rng.rational();
    const auto z = random_element(rng, DivAlg::H);
    const auto c = form_check(Rational(2), t, x, z);
    EXPECT_TRUE(c.ok) << c.detail;
  }
  // The normalization 4B is off by a factor 2 whenever t^2 - x^2 - |z|^2 != 0.
  EXPECT_FALSE(form_check(Rational(4), Rational(1), Rational(0), KRational(DivAlg::H, Rational(0))).ok);
}

TEST(Lorentz, ClosureBasisIsIndependent) {
  const auto basis = lorentz_closure_basis(DivAlg::C);
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis.front().size(), 4u);
}

TEST(NilMatrix, BracketTable) {
  const auto t = bracket_table(DivAlg::H);
  EXPECT_EQ(t.size(), 64u);
  const auto& first = t.front();
  EXPECT_EQ(first.coeffs, (std::map<std::string, Rational>{{"R11", Rational(-2)}}));
  for (const auto& e : t)
    if (e.a == e.b && e.alpha != e.beta) EXPECT_TRUE(e.coeffs.empty());
}
