// The normed division algebras R, C, H, O on an orthonormal basis u1 = 1,
// u2, ..., uk, with coefficients in any ring-like type.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "supergrass/scalar.hpp"

namespace sg {

enum class DivAlg : std::uint8_t { R, C, H, O };

unsigned dim(DivAlg a);
DivAlg divalg_from_dim(unsigned k);  // throws PreconditionError unless k in {1,2,4,8}
std::string name(DivAlg a);

/// u_a u_b = sign * u_index (0-based: index 0 is u1 = 1).
struct BasisProduct {
  int sign;
  unsigned index;
};
BasisProduct basis_product(DivAlg a, unsigned x, unsigned y);

/// Oriented lines (1-based labels of imaginary units): u_p u_q = u_r along each
/// cyclic order (p, q, r). The quaternion units are the line (2, 3, 4).
const std::vector<std::array<unsigned, 3>>& octonion_lines();

/// G[a][b][c] with (u_a conj(u_b) - u_b conj(u_a))/2 = sum_c G[a][b][c] u_c.
using GammaConstants = std::vector<std::vector<std::vector<Rational>>>;
GammaConstants gamma_constants(DivAlg a);

/// Element sum_a c[a] u_a. T needs +, -, unary -, * and a default zero.
template <class T>
class DAElement {
 public:
  DAElement() = default;
  explicit DAElement(DivAlg tag, T zero = T()) : tag_(tag), c_(dim(tag), zero) {}
  DAElement(DivAlg tag, std::vector<T> coeffs) : tag_(tag), c_(std::move(coeffs)) {
    if (c_.size() != dim(tag)) throw PreconditionError("wrong number of coefficients for " + name(tag));
  }
  /// coefficient * u_index
  static DAElement unit(DivAlg tag, unsigned index, T coefficient, T zero = T()) {
    DAElement e(tag, zero);
    e.c_.at(index) = std::move(coefficient);
    return e;
  }

  DivAlg tag() const { return tag_; }
  unsigned size() const { return static_cast<unsigned>(c_.size()); }
  const T& operator[](unsigned i) const { return c_.at(i); }
  T& operator[](unsigned i) { return c_.at(i); }
  const std::vector<T>& coeffs() const { return c_; }

  DAElement conj() const {
    DAElement r(*this);
    for (unsigned i = 1; i < r.c_.size(); ++i) r.c_[i] = -r.c_[i];
    return r;
  }
  /// (a + conj a)/2, i.e. the u1 coefficient.
  T re() const { return c_.at(0); }
  DAElement im() const {
    DAElement r(*this);
    r.c_[0] = T();
    return r;
  }

  DAElement operator-() const {
    DAElement r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  DAElement& operator+=(const DAElement& o) {
    check(o);
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  DAElement& operator-=(const DAElement& o) {
    check(o);
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend DAElement operator+(DAElement a, const DAElement& b) { return a += b; }
  friend DAElement operator-(DAElement a, const DAElement& b) { return a -= b; }

  /// Table-driven bilinear product; coefficients multiply in operand order.
  friend DAElement operator*(const DAElement& a, const DAElement& b) {
    a.check(b);
    DAElement r(a.tag_, T());
    std::vector<bool> touched(r.c_.size(), false);
    for (unsigned x = 0; x < a.c_.size(); ++x)
      for (unsigned y = 0; y < b.c_.size(); ++y) {
        const BasisProduct p = basis_product(a.tag_, x, y);
        T t = a.c_[x] * b.c_[y];
        if (p.sign < 0) t = -t;
        r.c_[p.index] = touched[p.index] ? r.c_[p.index] + t : t;
        touched[p.index] = true;
      }
    return r;
  }
  /// Scalar multiplication from the left: coefficient-wise s * c.
  friend DAElement operator*(const T& s, const DAElement& a) {
    DAElement r(a);
    for (auto& x : r.c_) x = s * x;
    return r;
  }
  friend bool operator==(const DAElement& a, const DAElement& b) {
    return a.tag_ == b.tag_ && a.c_ == b.c_;
  }
  friend bool operator!=(const DAElement& a, const DAElement& b) { return !(a == b); }

 private:
  void check(const DAElement& o) const {
    if (tag_ != o.tag_) throw PreconditionError("division algebra tag mismatch");
  }

  DivAlg tag_ = DivAlg::R;
  std::vector<T> c_;
};

/// a * conj(a) reduced to its u1 coefficient (sum of squares of coefficients).
template <class T>
T norm_sq(const DAElement<T>& a) {
  T s = T();
  for (unsigned i = 0; i < a.size(); ++i) s = s + a[i] * a[i];
  return s;
}

/// Elementwise coefficient conversion.
template <class U, class T, class F>
DAElement<U> map_coeffs(const DAElement<T>& a, F f, U zero = U()) {
  DAElement<U> r(a.tag(), zero);
  for (unsigned i = 0; i < a.size(); ++i) r[i] = f(a[i]);
  return r;
}

std::string to_string(const DAElement<Rational>& a);

/// Compares the Clifford envelope on one generator eps with B(eps, eps) = 1
/// against C on the basis {1, eps} -> {u1, u2}. True iff all four basis
/// products agree.
bool clifford_complex_check();

}  // namespace sg
