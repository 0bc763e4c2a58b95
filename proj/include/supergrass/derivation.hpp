// First-order graded derivations given by their images on generators, super
// brackets, the graded Jacobi check and the Cartan triple on polynomial forms.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supergrass/superpoly.hpp"

namespace sg {

/// X = sum_s X(s) d/ds acting from the left. Symbols without an image are sent
/// to zero. Application follows the graded Leibniz rule
///   X(fg) = X(f) g + (-1)^{|X||f|} f X(g).
class Derivation {
 public:
  Derivation() = default;
  Derivation(TablePtr table, Parity parity, std::string label = {});

  /// d/d(sym): image 1 on sym, parity of sym.
  static Derivation partial(TablePtr table, std::uint32_t sym);
  static Derivation partial(TablePtr table, const std::string& name);

  const TablePtr& table() const { return table_; }
  Parity parity() const { return parity_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  void set_image(std::uint32_t sym, SuperPolynomial image);
  /// Marks symbols on which the derivation is not defined (for instance the
  /// top-order jets of a truncated total derivative). Applying the derivation
  /// to a polynomial that contains one throws UnsupportedError.
  void mark_undefined(std::uint32_t sym) { undefined_.insert(sym); }
  SuperPolynomial image(std::uint32_t sym) const;
  const std::map<std::uint32_t, SuperPolynomial>& images() const { return images_; }
  const std::set<std::uint32_t>& undefined() const { return undefined_; }

  /// Every nonzero image has parity |X| + |s|.
  bool is_homogeneous() const;

  SuperPolynomial operator()(const SuperPolynomial& f) const;

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Scalar& c, const Derivation& d);
  /// Left multiplication g * X, where g is homogeneous. Parity |g| + |X|.
  friend Derivation operator*(const SuperPolynomial& g, const Derivation& d);
  /// Same images on every symbol.
  friend bool operator==(const Derivation& a, const Derivation& b);
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  /// "sum of image*d/dsym" in symbol order, "0" for the zero derivation.
  std::string str() const;

 private:
  TablePtr table_;
  Parity parity_ = Parity::Even;
  std::string label_;
  std::map<std::uint32_t, SuperPolynomial> images_;
  std::set<std::uint32_t> undefined_;
};

/// Z(s) = X(Y(s)) - (-1)^{|X||Y|} Y(X(s)) on every generator s moved by X or Y
/// (or only on `on` when given). Throws ParityError on inhomogeneous operands.
Derivation super_bracket(const Derivation& x, const Derivation& y,
                         const std::optional<std::vector<std::uint32_t>>& on = std::nullopt);

/// Graded Jacobi sum
///   (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
/// evaluated on every generator of the table. True iff it vanishes.
bool jacobi_check(const Derivation& x, const Derivation& y, const Derivation& z);

/// Applies X to f n times.
SuperPolynomial apply_power(const Derivation& x, const SuperPolynomial& f, unsigned n);

/// Differential forms on R^n: even coordinates x1..xn then odd dx1..dxn.
TablePtr forms_table(unsigned n);

struct CartanTriple {
  Derivation d;
  Derivation iota;
  Derivation lie;
};

/// d, the contraction with xi and Lie_xi = [d, iota_xi] on forms_table(n).
/// `xi` holds n polynomial coefficients in x1..xn (only even coordinates may
/// appear; anything else raises UnsupportedError).
CartanTriple cartan_triple(const TablePtr& forms, const std::vector<SuperPolynomial>& xi);

}  // namespace sg
