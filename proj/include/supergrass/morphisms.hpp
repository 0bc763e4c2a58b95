// Pullback morphisms R^{m|k} x R^{0|L} -> R^{n|l} in exponential normal form:
// Phi^* f = (1 x phi)^*(e^Xi f) with Xi = sum_I eta^I xi_I, then the target odd
// coordinates replaced by their odd images.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supergrass/check.hpp"
#include "supergrass/derivation.hpp"

namespace sg {

/// One table for source and target: x (source even), y (target even), th
/// (source odd), et (flesh), ps (target odd), in that order. With m == 1 the
/// source coordinate is "x", with n == 1 the target coordinate is "y".
struct MorphismSpace {
  unsigned m = 0, k = 0, L = 0, n = 0, l = 0;
  TablePtr table;
  std::vector<std::uint32_t> x, y, theta, eta, psi;

  static MorphismSpace make(unsigned m, unsigned k, unsigned L, unsigned n, unsigned l);

  /// Source odd variables: th1..thk then et1..etL.
  std::vector<std::uint32_t> odd_source() const;
  unsigned q() const { return k + L; }
  /// Product of the listed source odd variables (1-based into odd_source()).
  SuperPolynomial odd_monomial(const std::vector<unsigned>& I) const;
  SuperPolynomial var(std::uint32_t s) const { return SuperPolynomial::variable(table, s); }
};

using MultiIndex = std::vector<unsigned>;

struct FleshMorphism {
  MorphismSpace space;
  /// phi^i, polynomials in x.
  std::vector<SuperPolynomial> phi;
  /// xi_I: even vector fields on the y's with polynomial coefficients.
  std::map<MultiIndex, Derivation> xi;
  /// Odd images of the target odd coordinates.
  std::vector<SuperPolynomial> chi;

  /// The operator F -> sum_I eta^I xi_I(F).
  Derivation Xi() const;
  /// e^Xi f as a power series; stops at the first vanishing power.
  SuperPolynomial exp_xi(const SuperPolynomial& f) const;
  /// Number of nonzero powers Xi^n f, n >= 1, seen by exp_xi on f.
  unsigned series_length(const SuperPolynomial& f) const;
  SuperPolynomial pullback(const SuperPolynomial& f) const;
};

/// Identity morphism data: phi^i = x^i (requires m == n), no Xi, chi_j = 0.
FleshMorphism trivial_morphism(const MorphismSpace& sp);

using Pullback = std::function<SuperPolynomial(const SuperPolynomial&)>;

/// Unit, linearity a f + b g, multiplicativity on (f, g) and, when requested,
/// parity preservation on the homogeneous parts of f and g.
CheckOutcome morphism_check(const Pullback& pb, const TablePtr& table, const SuperPolynomial& f,
                            const SuperPolynomial& g, const Scalar& a, const Scalar& b,
                            bool require_parity);
CheckOutcome morphism_check(const FleshMorphism& phi, const SuperPolynomial& f, const SuperPolynomial& g,
                            const Scalar& a = Scalar(2), const Scalar& b = Scalar(-3));

/// R^{0|1} -> R^n: f -> f(point) + df_point(v) th. Table y.. then th.
struct PointTangent {
  TablePtr table;
  std::vector<std::uint32_t> y;
  std::uint32_t th = 0;
  std::vector<Rational> point, v;

  static PointTangent make(std::vector<Rational> point, std::vector<Rational> v);
  SuperPolynomial pullback(const SuperPolynomial& f) const;
};

/// Candidate f -> f(p) + df(v1) th1 + df(v2) th2 + df(w) th1th2 on R^{0|2}.
/// True iff it is multiplicative on every pair of monomials of degree <= 2.
bool odd_plane_obstruction(const std::vector<Rational>& point, const std::vector<Rational>& v1,
                           const std::vector<Rational>& v2, const std::vector<Rational>& w = {});

/// e^{Xi_0} prod_A (1 + th^A Xi_A), grouping Xi by its th-prefix.
struct Factorization {
  const FleshMorphism* source = nullptr;
  Derivation xi_empty;
  std::vector<std::pair<MultiIndex, Derivation>> parts;  // A (indices into theta) -> Xi_A

  SuperPolynomial apply(const SuperPolynomial& f) const;  // before y -> phi
  SuperPolynomial pullback(const SuperPolynomial& f) const;
};

struct FactorizeResult {
  std::optional<Factorization> form;
  /// When some [xi_I, xi_J] != 0: the pair and the bracket.
  std::string obstruction;
};
FactorizeResult factorize(const FleshMorphism& phi);

/// Components of Phi^* y^i by th-monomial: entry A (sorted theta indices, {} for
/// the bare part) holds the coefficient after pulling th^A to the left.
using ComponentMap = std::map<MultiIndex, SuperPolynomial>;
std::vector<ComponentMap> component_fields(const FleshMorphism& phi);

/// First (I, J) with xi_I xi_J y^i != 0 for some i, or nullopt.
std::optional<std::pair<MultiIndex, MultiIndex>> chart_violation(const FleshMorphism& phi);

/// For k = 2: Phi^* f against
///   f(phi) + th^a d_i f(phi) psi_a^i + th1 th2 (d_i f(phi) F^i - d_ij f(phi) psi_1^i psi_2^j)
/// with (phi, psi_1, psi_2, F) read from component_fields.
bool nonlinear_expansion_check(const FleshMorphism& phi, const SuperPolynomial& f);

/// Right-hand side of the expansion above, exposed for diagnostics.
SuperPolynomial nonlinear_expansion(const FleshMorphism& phi, const SuperPolynomial& f);

}  // namespace sg
