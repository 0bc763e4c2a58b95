// Super Minkowski spaces of dimension k + 2 for K = R, C, H, O (k = 1, 2, 4, 8).
//
// Matrix model: 5x5 strictly block-nilpotent matrices with entries in
// K tensored with a supercommutative coefficient ring. The coefficient table
// always starts with a Clifford generator "eps" (eps*eps = -1) followed by odd
// parameters et1..etq, so that [M, N] = MN + NM on odd generators.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supergrass/check.hpp"
#include "supergrass/derivation.hpp"
#include "supergrass/divalg.hpp"
#include "supergrass/random.hpp"

namespace sg {

using KPoly = DAElement<SuperPolynomial>;
using KNumber = DAElement<Scalar>;
using KRational = DAElement<Rational>;

KNumber to_number(const KRational& a);

/// Coefficient ring for the matrix model.
struct MatrixRing {
  DivAlg tag = DivAlg::R;
  TablePtr table;
  std::uint32_t eps = 0;
  std::vector<std::uint32_t> eta;

  static MatrixRing make(DivAlg tag, unsigned q = 0);
  unsigned k() const { return dim(tag); }
  SuperPolynomial poly(const Scalar& c) const { return SuperPolynomial::constant(table, c); }
  SuperPolynomial var(std::uint32_t s) const { return SuperPolynomial::variable(table, s); }
  KPoly lift(const KNumber& z) const;
  KPoly unit(unsigned alpha) const;  // u_alpha, 1-based
};

class NilMatrix5 {
 public:
  NilMatrix5() = default;
  explicit NilMatrix5(const MatrixRing& ring);

  static NilMatrix5 identity(const MatrixRing& ring);

  /// 1-based indices.
  const KPoly& operator()(unsigned i, unsigned j) const { return e_.at(i - 1).at(j - 1); }
  KPoly& operator()(unsigned i, unsigned j) { return e_.at(i - 1).at(j - 1); }

  bool is_zero() const;
  NilMatrix5 conj_i() const;
  std::string str() const;

  NilMatrix5 operator-() const;
  NilMatrix5& operator+=(const NilMatrix5& o);
  NilMatrix5& operator-=(const NilMatrix5& o);
  friend NilMatrix5 operator+(NilMatrix5 a, const NilMatrix5& b) { return a += b; }
  friend NilMatrix5 operator-(NilMatrix5 a, const NilMatrix5& b) { return a -= b; }
  friend NilMatrix5 operator*(const NilMatrix5& a, const NilMatrix5& b);
  friend NilMatrix5 operator*(const SuperPolynomial& c, const NilMatrix5& m);
  friend NilMatrix5 operator*(const Scalar& c, const NilMatrix5& m);
  friend bool operator==(const NilMatrix5& a, const NilMatrix5& b);
  friend bool operator!=(const NilMatrix5& a, const NilMatrix5& b) { return !(a == b); }

  const MatrixRing& ring() const { return ring_; }

 private:
  MatrixRing ring_;
  std::array<std::array<KPoly, 5>, 5> e_;
};

/// MN + NM. Both operands must live in the translation sector (odd entries at
/// (1,3), (2,3), (3,4), (3,5) and even entries in rows 1-2, columns 4-5).
NilMatrix5 anticomm(const NilMatrix5& m, const NilMatrix5& n);
NilMatrix5 commutator(const NilMatrix5& m, const NilMatrix5& n);

/// Q_a^lambda, a in {1, 2}.
NilMatrix5 q_matrix(const MatrixRing& r, unsigned a, const KNumber& lambda);
NilMatrix5 q_basis(const MatrixRing& r, unsigned a, unsigned alpha);
/// Unit u1 at (a, 3 + b).
NilMatrix5 x_matrix(const MatrixRing& r, unsigned a, unsigned b);
/// zeta X_ab (zeta on the left of the unit).
NilMatrix5 x_matrix(const MatrixRing& r, unsigned a, unsigned b, const KPoly& zeta);
/// R_(ab) = (X_ab + X_ba)/2.
NilMatrix5 re_matrix(const MatrixRing& r, unsigned a, unsigned b);
/// I_gamma: u_gamma/2 at (1,5), -u_gamma/2 at (2,4).
NilMatrix5 im_matrix(const MatrixRing& r, unsigned gamma);
/// R_(ab)(zeta) = (zeta + conj zeta)(X_ab + X_ba)/4.
NilMatrix5 re_of(const MatrixRing& r, unsigned a, unsigned b, const KPoly& zeta);
/// I_[ab](zeta) = (zeta - conj zeta)(X_ab - X_ba)/4.
NilMatrix5 im_of(const MatrixRing& r, unsigned a, unsigned b, const KPoly& zeta);

int eps2(unsigned a, unsigned b);  // eps_12 = 1 = -eps_21

/// Bracket relations for every pair of basis supercharges plus `samples`
/// random pairs (lambda, mu): the direct form, the split into real and
/// imaginary parts, and the structure-constant form.
CheckOutcome supercharge_bracket_check(DivAlg tag, unsigned samples = 4, std::uint64_t seed = 1);

/// [Q_a^alpha, Q_b^beta] = sum c R_(cd) + sum c I_gamma for basis supercharges.
/// Generator labels are "R11", "R12", "R22" and "I2".."Ik"; zero coefficients
/// are omitted.
struct BracketEntry {
  unsigned a, alpha, b, beta;
  std::map<std::string, Rational> coeffs;
};
std::vector<BracketEntry> bracket_table(DivAlg tag);

/// R's and I's commute with each other and with every Q; every product of
/// three generators vanishes.
CheckOutcome centrality_check(DivAlg tag);

/// exp(V, Th) = 1 + V + Th + Th Th / 2.
NilMatrix5 super_exp(const NilMatrix5& v, const NilMatrix5& th);

/// A point of the super translation group with random even coordinates v and
/// odd coordinates theta drawn from the flesh parameters.
struct TranslationPoint {
  NilMatrix5 v, theta;
};
TranslationPoint random_translation(Rng& rng, const MatrixRing& r);

/// exp(V,Th) exp(W,Ps) = exp(V + W + [Th,Ps]_-/2, Th + Ps), random samples.
CheckOutcome group_law_check(DivAlg tag, unsigned samples = 3, std::uint64_t seed = 2);

/// Even part V = v^(ab) R_(ab) + v^gamma I_gamma. Throws ParityError if any
/// coefficient is not even.
NilMatrix5 even_translation(const MatrixRing& r, const SuperPolynomial& v11, const SuperPolynomial& v12,
                            const SuperPolynomial& v22, const std::vector<SuperPolynomial>& vim);
/// Odd part th^a_alpha Q_a^alpha. Throws ParityError if any coefficient is not odd.
NilMatrix5 odd_translation(const MatrixRing& r, const std::vector<std::vector<SuperPolynomial>>& th);

/// The 2x2 Hermitian block [[a, z], [conj z, d]].
struct Hermitian2 {
  DivAlg tag = DivAlg::R;
  Rational a, d;
  KRational z;

  /// (1/2) [[t + x, z], [conj z, t - x]].
  static Hermitian2 from_txz(DivAlg tag, const Rational& t, const Rational& x, const KRational& z);
  Rational t() const { return a + d; }
  Rational x() const { return a - d; }
  Rational det() const { return a * d - norm_sq(z); }
};
Rational minkowski_norm(const Rational& t, const Rational& x, const KRational& z);

/// Reads the X block of -[Q,Q]/2 for Q = Q_1^{l1} + Q_2^{l2}.
Hermitian2 null_vector(DivAlg tag, const KRational& l1, const KRational& l2);
/// [Q, Q] = -2 X with det X = 0, trace X >= 0, and X as predicted from (l1, l2).
CheckOutcome null_vector_check(DivAlg tag, const KRational& l1, const KRational& l2);

/// R-symmetry for C and H: with alpha = q^2/|q|^2 the rotation
/// lambda -> lambda alpha on both slots leaves every [Q, Q] unchanged.
CheckOutcome r_symmetry_check(DivAlg tag, const KRational& q, unsigned samples = 4, std::uint64_t seed = 3);

// Lorentz sector ------------------------------------------------------------

/// 2x2 matrix over K with rational coefficients.
using KMat2 = std::array<std::array<KRational, 2>, 2>;
/// Square matrix of rationals, row-major.
using RatMatrix = std::vector<std::vector<Rational>>;

KMat2 kmat2(DivAlg tag, const KRational& p, const KRational& q, const KRational& r, const KRational& s);
KMat2 mul(const KMat2& a, const KMat2& b);
KMat2 dagger(const KMat2& m);

/// Basis e_{-1} = 1, e_0 = diag(1,-1), e_1 = [[0,1],[1,0]], e_j = [[0,u_j],[-u_j,0]]
/// of Hermitian matrices; index 0 is e_{-1}, index 1 + j is e_j.
KMat2 hermitian_basis(DivAlg tag, unsigned index);
/// Coordinates of a Hermitian matrix in that basis. Throws PreconditionError
/// when the matrix is not Hermitian.
std::vector<Rational> hermitian_coords(const KMat2& m);

/// rho_sigma(m) = (sigma m + m sigma^dagger)/2 as a (k+2)x(k+2) matrix acting
/// on hermitian_coords. Requires Re tr sigma = 0.
RatMatrix rho(const KMat2& sigma);

/// Infinitesimal boost B_j (e_{-1} <-> e_j) and rotation A_ij (e_i -> e_j,
/// e_j -> -e_i), j in 0..k, as (k+2)x(k+2) matrices.
RatMatrix boost(unsigned k, unsigned j);
RatMatrix rotation(unsigned k, unsigned i, unsigned j);

struct LorentzRow {
  std::string label;
  KMat2 sigma;
  RatMatrix expected;
};
/// sigma's for B_j (0 <= j <= k), A_0j (1 <= j <= k), A_1j (2 <= j <= k).
std::vector<LorentzRow> lorentz_table(DivAlg tag);
CheckOutcome lorentz_table_check(DivAlg tag);

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b);
/// A_ij = -[B_i, B_j] for all 0 <= i < j <= k.
CheckOutcome rotation_from_boosts_check(unsigned k);

/// Basis of the Lie algebra generated by rho of the traceless 3k-dimensional
/// family [[p, q], [r, -p]] with one unit entry, grown by brackets until the
/// rank stops increasing.
std::vector<RatMatrix> lorentz_closure_basis(DivAlg tag);
unsigned lorentz_closure_dim(DivAlg tag);

/// g h g^dagger for K = R or C (UnsupportedError otherwise).
Hermitian2 lorentz_conjugate(const KMat2& g, const Hermitian2& h);
/// det(g h g^dagger) = det h for random h and random g of determinant 1.
CheckOutcome lorentz_conjugation_check(DivAlg tag, unsigned samples = 5, std::uint64_t seed = 4);

// Invariant vector fields --------------------------------------------------

/// Coordinates v11, v12, v22, v2..vk, th11..th1k, th21..th2k plus optional
/// extra even coordinates appended after the v's.
struct SuperMinkowski {
  DivAlg tag = DivAlg::R;
  TablePtr table;
  std::uint32_t v11 = 0, v12 = 0, v22 = 0;
  std::vector<std::uint32_t> vim;                      // v2..vk
  std::array<std::vector<std::uint32_t>, 2> theta;     // theta[a-1][alpha-1]
  std::vector<std::uint32_t> extra;

  static SuperMinkowski make(DivAlg tag, const std::vector<std::string>& extra_even = {});
  unsigned k() const { return dim(tag); }

  /// d_(ab): d/dv11, d/dv12, d/dv22 (symmetric in a, b).
  Derivation d_sym(unsigned a, unsigned b) const;
  /// d^[ab] = sum_c G[a][b][c] d/dv_c for the imaginary part (zero on the real line).
  Derivation d_im(unsigned alpha, unsigned beta) const;
  /// D^alpha_a = d^alpha_a - th^b_beta (delta^{alpha beta} d_(ab) + eps_ab d^[alpha beta]);
  /// tau uses the opposite sign.
  Derivation D(unsigned a, unsigned alpha) const;
  Derivation tau(unsigned a, unsigned alpha) const;
};

/// [tau, D] = 0, [tau, tau] = 2(...), [D, D] = -2(...) on all index pairs.
CheckOutcome invariant_fields_check(DivAlg tag);

/// Rewrites X in new even coordinates. `forward` expresses each new
/// coordinate in old ones, `inverse` each old one in new ones; every other
/// symbol is kept. Old coordinates drop out of the result.
Derivation change_coordinates(const Derivation& x, const std::map<std::uint32_t, SuperPolynomial>& forward,
                              const std::map<std::uint32_t, SuperPolynomial>& inverse);

/// k = 1 in coordinates (t, x, y, th1, th2).
CheckOutcome real_dictionary_check();

/// k = 2 chiral form: matrix level and vector-field level, plus the
/// coordinate dictionary for d_{a b-dot}.
CheckOutcome chiral_check();

/// k = 4 and k = 8 reductions Q_aA = Q_a^{u_alpha} - i Q_a^{u_beta}.
struct ReductionPair {
  unsigned alpha, beta;  // 1-based units
};
std::vector<ReductionPair> reduction_pairs(DivAlg tag);
/// Z_AB as a matrix for A, B in 1..N (N = 2 or 4).
NilMatrix5 central_charge(const MatrixRing& r, unsigned A, unsigned B);
/// Complexified generators Q_aA and conj Q_aA.
NilMatrix5 reduced_q(const MatrixRing& r, unsigned a, unsigned A);
NilMatrix5 reduced_qbar(const MatrixRing& r, unsigned a, unsigned A);
/// X_{a b-dot} = (X_ab + X_ba)/2 - i u2 (X_ab - X_ba)/2.
NilMatrix5 x_dotted(const MatrixRing& r, unsigned a, unsigned b);
CheckOutcome reduction_check(DivAlg tag);

}  // namespace sg
