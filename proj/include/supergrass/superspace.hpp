// Superdomains, Berezin integration, supertime, the H-infinity extension and
// the lift of even functions of the flesh variables to Lambda^{2*}_+.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergrass/check.hpp"
#include "supergrass/derivation.hpp"

namespace sg {

/// R^{m|k} x R^{0|L}. Symbols are declared in the order x1..xm (or the given
/// names), th1..thk, et1..etL.
struct SuperDomain {
  unsigned m = 0, k = 0, L = 0;
  TablePtr table;
  std::vector<std::uint32_t> x, theta, eta;
  std::optional<std::pair<Rational, Rational>> box;

  static SuperDomain make(unsigned m, unsigned k, unsigned L, std::vector<std::string> even_names = {});

  SuperPolynomial var(const std::string& name) const { return SuperPolynomial::variable(table, name); }
  SuperPolynomial th(unsigned a) const { return SuperPolynomial::variable(table, theta.at(a - 1)); }
  SuperPolynomial et(unsigned i) const { return SuperPolynomial::variable(table, eta.at(i - 1)); }
};

/// Coefficient of the product of `odd` (in the given order). The remaining
/// dependence on every other symbol is kept.
SuperPolynomial berezin(const SuperPolynomial& f, const std::vector<std::uint32_t>& odd);
/// Coefficient of th1...thk; integrates over the box as well when one is set.
SuperPolynomial berezin(const SuperDomain& d, const SuperPolynomial& f);

/// Exact integral of the listed even symbols over [lo, hi] each.
SuperPolynomial integrate_box(const SuperPolynomial& f, const std::vector<std::uint32_t>& even,
                              const Rational& lo, const Rational& hi);

/// Berezin integral of f(x, th + zeta) equals that of f, and each d/dth^j f
/// integrates to zero. zeta[j] must be odd.
bool berezin_translation_check(const SuperDomain& d, const SuperPolynomial& f,
                               const std::vector<SuperPolynomial>& zeta);

/// R^{1|1} with flesh et1, et2: table t, th, et1, et2.
struct Supertime {
  TablePtr table;
  Derivation dt, D, tau;
};
Supertime supertime();

/// Even Grassmann number: body + nilpotent soul.
struct EvenGrassmannPoint {
  Rational body;
  SuperPolynomial soul;
};
/// Splits an even polynomial in odd symbols only. Throws PreconditionError when
/// the input depends on an even symbol or is not even.
EvenGrassmannPoint body_soul(const SuperPolynomial& z);

/// sum over multi-indices r of (d^r f)(body z) soul(z)^r / r!, expanded one
/// variable at a time. f is a polynomial in the listed even symbols; z lives on
/// the same table.
SuperPolynomial hinf_extend(const SuperPolynomial& f, const std::vector<std::uint32_t>& vars,
                            const std::vector<SuperPolynomial>& z);

/// Table x1..xm, et1..etq, then even symbols s<I> for every I of even length
/// >= 2 in {1..q} (names like "s12", "s1234").
struct LiftSpace {
  unsigned m = 0, q = 0;
  TablePtr table;
  std::vector<std::uint32_t> x, eta;
  /// Increasing index sets and their symbols, in declaration order.
  std::vector<std::vector<unsigned>> sets;
  std::vector<std::uint32_t> s;

  static LiftSpace make(unsigned m, unsigned q);

  /// Product et^{I} in increasing order.
  SuperPolynomial eta_monomial(const std::vector<unsigned>& I) const;
  std::optional<std::size_t> set_index(const std::vector<unsigned>& I) const;
};

/// Linear representative f_0 + sum f_I s^I of an even f in x and eta.
/// Throws ParityError when f is not even.
SuperPolynomial theta_lift(const LiftSpace& sp, const SuperPolynomial& f);

/// iota^*(e^theta F): the exponential series of theta = sum eta^I d/ds^I,
/// evaluated at s = 0.
SuperPolynomial theta_lower(const LiftSpace& sp, const SuperPolynomial& F);

/// Rewrites products s^{I1} s^{I2} to +-s^{I1 u I2} (or 0 when I1, I2 meet)
/// until every term is linear in s. The sign is that of et^{I1} et^{I2}.
/// `reverse` processes factor pairs from the right, for confluence checks.
SuperPolynomial reduce_ideal(const LiftSpace& sp, const SuperPolynomial& F, bool reverse = false);

/// The vector field on the lift corresponding to Z = et1 d/det2 (requires q >= 2).
Derivation lift_eta_rotation(const LiftSpace& sp);

/// X lower(F) = lower(XX F) for a vector field X on x, et and its lift XX:
///   1: X = d/dx1, XX = d/dx1
///   2: X = et1 et2 d/dx1, XX = s12 d/dx1
///   3: X = et1 d/det2, XX = lift_eta_rotation
/// Cases 2 and 3 need q >= 2; every case needs m >= 1.
CheckOutcome lift_vector_field_check(const LiftSpace& sp, unsigned which, const SuperPolynomial& F);

}  // namespace sg
