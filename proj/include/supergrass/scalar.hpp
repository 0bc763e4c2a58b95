// Exact scalars: GMP rationals and Gaussian rationals a + b*I, where I is a
// formal square root of -1 that is central and even.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sg {

using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TableMismatchError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error on bad text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text of a rational: "3", "-1/2".
std::string to_string(const Rational& q);

/// Gaussian rational re + im*I.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: implicit on purpose for literals
  Scalar(const Rational& re) : re_(re) {}  // NOLINT
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static Scalar I() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws Error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "3", "-1/2", "2*I", "(1/2 + 3*I)" (parenthesised when both parts are nonzero).
std::string to_string(const Scalar& s);

}  // namespace sg
