// k = 4 through Lambda^2 C^4: quaternionic pairs (lambda1, lambda2) <-> U in C^4,
// Hermitian 2x2 quaternion matrices <-> bivectors with reality conditions.
// Complex numbers are Gaussian rationals; the complex unit is identified with
// the quaternion unit i = u2.
#pragma once

#include <array>

#include "supergrass/check.hpp"
#include "supergrass/minkowski.hpp"

namespace sg {

using C4 = std::array<Scalar, 4>;
/// Bivector coordinates y^{ab}, a < b, in the order 12, 13, 14, 23, 24, 34.
using Bivector = std::array<Scalar, 6>;

/// Index of y^{ab} in a Bivector (1 <= a < b <= 4).
unsigned biv_index(unsigned a, unsigned b);

/// (u1, u2, u3, u4) -> (u1 + j u3, u2 + j u4).
std::array<KRational, 2> to_quaternions(const C4& u);
/// sigma(U) = (-conj u3, -conj u4, conj u1, conj u2).
C4 sigma(const C4& u);
Bivector wedge(const C4& u, const C4& v);
Bivector operator+(const Bivector& a, const Bivector& b);
Bivector operator*(const Scalar& c, const Bivector& a);

/// The closed-form coordinates of U ^ sigma(U).
Bivector wedge_sigma_formulas(const C4& u);
bool satisfies_reality(const Bivector& y);

/// P: Hermitian quaternion block -> bivector.
Bivector P(const Hermitian2& h);
/// P^{-1} on bivectors satisfying the reality conditions (PreconditionError otherwise).
Hermitian2 P_inverse(const Bivector& y);
/// The X block of a translation-sector matrix as a Hermitian quaternion matrix.
Hermitian2 x_block(const NilMatrix5& m);

/// B(Y, Y') from Y ^ Y' = B e1^e2^e3^e4, computed in a Grassmann algebra.
Scalar bilinear_B(const Bivector& y, const Bivector& yp);

/// P([Q, Q]) = -2 U ^ sigma(U) with (lambda1, lambda2) = T(U).
CheckOutcome bridge_check(const C4& u);
/// P([Q^(lambda), Q^(mu)]) = -U ^ sigma(V) - V ^ sigma(U).
CheckOutcome polarization_check(const C4& u, const C4& v);
/// U ^ sigma(U) matches the closed-form y's, satisfies the reality conditions,
/// and P^{-1} of it is [[|l1|^2, l1 conj l2], [l2 conj l1, |l2|^2]].
CheckOutcome coordinate_table_check(const C4& u);
/// d/dy^{ab} in terms of d/dt, d/dx, d/dz^c.
CheckOutcome derivative_dictionary_check();
/// factor * B(Pv, Pv) = -(t^2 - x^2 - |z|^2) for v = (t, x, z).
CheckOutcome form_check(const Rational& factor, const Rational& t, const Rational& x, const KRational& z);

C4 random_c4(Rng& rng);

}  // namespace sg
