// Superparticle on R^{1|1} with a flat target and the scalar sigma-model on
// R^{3|2} with a polynomial superpotential, computed in jet algebras.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "supergrass/check.hpp"
#include "supergrass/derivation.hpp"

namespace sg {

struct FieldSpec {
  std::string name;
  Parity parity = Parity::Even;
};

/// Polynomial jet algebra: source coordinates, odd source coordinates,
/// constant parameters, and every jet of every field up to total order N.
/// Total derivatives are undefined on top-order jets.
class JetSpace {
 public:
  struct Layout {
    std::vector<std::string> coords;
    std::vector<std::string> odd_coords;
    std::vector<std::string> even_params;
    std::vector<std::string> odd_params;
    std::vector<FieldSpec> fields;
    unsigned order = 2;
  };
  static JetSpace make(const Layout& layout);

  const TablePtr& table() const { return table_; }
  const Layout& layout() const { return layout_; }
  SuperPolynomial var(const std::string& name) const { return SuperPolynomial::variable(table_, name); }
  SuperPolynomial constant(const Scalar& c) const { return SuperPolynomial::constant(table_, c); }
  SuperPolynomial zero() const { return SuperPolynomial(table_); }

  /// Jet of `field` with derivative letters, e.g. jet("phi", "tx").
  SuperPolynomial jet(const std::string& field, const std::string& letters = "") const;
  std::uint32_t jet_symbol(const std::string& field, const std::vector<std::uint32_t>& counts) const;
  /// Total derivative along a source coordinate.
  const Derivation& total(const std::string& coord) const;
  SuperPolynomial apply_total(SuperPolynomial f, const std::vector<std::uint32_t>& counts) const;

  /// sum_J (-1)^{|J|} D_J (dL/du_J), with left derivatives for odd u.
  SuperPolynomial euler(const SuperPolynomial& L, const std::string& field) const;

  /// Rewrites every chi_J g (chi an even field of a single coordinate, L
  /// linear in its jets) to (-1)^{|J|} chi D_J g, dropping boundary terms.
  SuperPolynomial integrate_by_parts(const SuperPolynomial& L, const std::string& field) const;

 private:
  Layout layout_;
  TablePtr table_;
  std::map<std::string, std::map<std::vector<std::uint32_t>, std::uint32_t>> jets_;
  std::map<std::string, Derivation> totals_;
};

/// Univariate polynomial h(u) = sum_n c[n] u^n with coefficients in a jet algebra.
struct Superpotential {
  std::vector<SuperPolynomial> c;

  SuperPolynomial operator()(const SuperPolynomial& u) const;
  Superpotential derivative() const;
};

// Superparticle ----------------------------------------------------------------

class Superparticle {
 public:
  /// n target dimensions; fields x1..xn (even), psi1..psin (odd), chi (even,
  /// for modulated variations); odd th (source), et, et1, et2 (flesh).
  static Superparticle make(unsigned n);

  const JetSpace& jets() const { return js_; }
  unsigned n() const { return n_; }
  SuperPolynomial x(unsigned i, const std::string& d = "") const;
  SuperPolynomial psi(unsigned i, const std::string& d = "") const;
  std::vector<SuperPolynomial> superfield() const;  // x + th psi
  const Derivation& D() const { return D_; }
  const Derivation& tau() const { return tau_; }

  /// -1/2 <D Phi, d Phi/dt> for a list of superfield components.
  SuperPolynomial density(const std::vector<SuperPolynomial>& phi) const;
  /// Berezin integral over th of the density.
  SuperPolynomial lagrangian(const std::vector<SuperPolynomial>& phi) const;
  /// <psi, xdot>
  SuperPolynomial charge() const;

 private:
  JetSpace js_;
  unsigned n_ = 1;
  Derivation D_, tau_;
};

/// Flat expansion -1/2 <psi, xdot> + th/2 (|xdot|^2 + <psi, psidot>), the
/// Berezin integral, and the psi = 0 limit.
CheckOutcome superparticle_expansion_check(unsigned n);
/// L[Phi] - L[Phi - et tau Phi] = 1/2 et d/dt <psi, xdot>.
CheckOutcome plain_variation_check(unsigned n);

struct ModulatedVariation {
  SuperPolynomial delta0;        // chi-linear part
  SuperPolynomial delta1;        // chi_t-linear part
  SuperPolynomial total;         // after integration by parts
  SuperPolynomial intermediate;  // the two-term bracket formula for delta1, evaluated literally
  CheckOutcome outcome;          // delta0, delta1, total and the Noether charge
  bool intermediate_agrees = false;
};
ModulatedVariation modulated_variation(unsigned n);

/// Q_i(x, psi) = (-et_i psi, et_i xdot) composed as maps on field pairs:
/// [Q1, Q2](x, psi) = -2 et1 et2 (xdot, psidot).
CheckOutcome susy_algebra_check(unsigned n);
/// Euler-Lagrange equations xddot = 0, psidot = 0 and d/dt <psi, xdot> = 0 on them.
CheckOutcome superparticle_el_check(unsigned n);

// Sigma model on R^{3|2} ----------------------------------------------------------

class SigmaModel {
 public:
  /// Coordinates t, x, y; odd th1, th2; parameters a0..a4 and c, s; fields
  /// phi, psi1, psi2 (odd), F; jets to order 2.
  static SigmaModel make();

  const JetSpace& jets() const { return js_; }
  /// h with symbolic coefficients a0..a_degree (degree <= 4).
  Superpotential symbolic_h(unsigned degree) const;
  Superpotential rational_h(const std::vector<Rational>& coeffs) const;

  SuperPolynomial superfield() const;
  /// d_11 = D_t + D_x, d_12 = d_21 = D_y, d_22 = D_t - D_x.
  Derivation d(unsigned a, unsigned b) const;
  Derivation Dop(unsigned a) const;
  Derivation tau(unsigned a) const;
  /// (cal D psi)_a
  SuperPolynomial dirac(unsigned a) const;
  /// psi cal D psi = psi1 (cal D psi)_2 - psi2 (cal D psi)_1
  SuperPolynomial psi_dirac_psi() const;
  SuperPolynomial component_lagrangian(const Superpotential& h) const;
  SuperPolynomial superspace_density(const Superpotential& h) const;

 private:
  JetSpace js_;
};

/// D_1 Phi and D_2 Phi against their component expansions.
CheckOutcome sigma_expansion_check();
/// Berezin integrals of the kinetic term and of Phi^*h, the component action
/// and the completed square with Q[Phi] = 1/2 (F + h')^2.
CheckOutcome sigma_action_check(const SigmaModel& m, const Superpotential& h);

/// Euler-Lagrange system of the component action. Conventions: E_F = F + h';
/// E_phi with F -> -h'(phi) equals -(box phi + h'' h' + h''' psi1 psi2);
/// (E_psi1, E_psi2) = ((D psi - h'' psi)_2, -(D psi - h'' psi)_1).
struct SigmaEL {
  SuperPolynomial e_phi, e_psi1, e_psi2, e_F;
};
SigmaEL sigma_euler_lagrange(const SigmaModel& m, const Superpotential& h);
CheckOutcome sigma_el_check(const SigmaModel& m, const Superpotential& h);

/// s^2 -> 1 - c^2 until s has degree <= 1.
SuperPolynomial trig_reduce(const SuperPolynomial& p, std::uint32_t c, std::uint32_t s);

/// BPS reduction: the th-components of (c tau1 + s tau2) Phi with psi = 0,
/// the first-order system, its second-order consequences and
/// box phi + h'' h' = (D_t - X) R1 - (Y + h'') R2 modulo s^2 = 1 - c^2. Also
/// the alpha = pi/4 specialization.
CheckOutcome bps_check(const SigmaModel& m, const Superpotential& h);
/// 1/2 [phi_t^2 + phi_x^2 + h'^2] = 1/2 [phi_t^2 + (phi_x -+ h')^2 +- 2 d/dx (h o phi)].
CheckOutcome bogomolnyi_check(const SigmaModel& m, const Superpotential& h);

}  // namespace sg
