// Exact elements of a supercommutative / Clifford envelope.
//
// A term is scalar * (even monomial) * (odd monomial). Odd factors are kept
// strictly increasing in table order; reordering a product accumulates the
// Koszul sign, a repeated odd generator kills the term and a repeated Clifford
// generator e contracts through e*e = -B(e,e).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supergrass/scalar.hpp"
#include "supergrass/symbols.hpp"

namespace sg {

struct Monomial {
  /// (symbol, exponent >= 1), sorted by symbol.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> even;
  /// Strictly increasing symbol indices.
  std::vector<std::uint32_t> odd;

  std::uint32_t even_degree() const;
  Parity parity() const { return odd.size() % 2 ? Parity::Odd : Parity::Even; }
  bool is_one() const { return even.empty() && odd.empty(); }
  std::uint32_t exponent(std::uint32_t sym) const;
  bool has_odd(std::uint32_t sym) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

/// Printing order: fewer odd factors first, then odd factors lexicographically,
/// then even degree, then even factors lexicographically.
bool operator<(const Monomial& a, const Monomial& b);

enum class ScalarRing : std::uint8_t { Rationals, GaussianRationals };

/// Parity of a polynomial. The zero polynomial reports Both and passes every
/// homogeneity precondition.
enum class Grading : std::uint8_t { Even, Odd, Both, Mixed };

/// Sign (+1 or -1) of the permutation sending position i to perm[i].
int permutation_sign(const std::vector<std::uint32_t>& perm);

class SuperPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  /// The table-less zero. It adopts the table of whatever it is combined with.
  SuperPolynomial() = default;
  explicit SuperPolynomial(TablePtr table, ScalarRing ring = ScalarRing::Rationals);

  static SuperPolynomial constant(TablePtr table, const Scalar& c);
  static SuperPolynomial variable(TablePtr table, std::uint32_t sym);
  static SuperPolynomial variable(TablePtr table, const std::string& name);
  /// c * m. The monomial must already be canonical for the table.
  static SuperPolynomial term(TablePtr table, const Scalar& c, Monomial m);

  const TablePtr& table() const { return table_; }
  ScalarRing ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Grading grading() const;
  bool is_even() const;  // Even or Both
  bool is_odd() const;   // Odd or Both
  SuperPolynomial even_part() const;
  SuperPolynomial odd_part() const;

  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  bool depends_on(std::uint32_t sym) const;
  /// Highest total degree of a term (even degree plus odd count); -1 for zero.
  int total_degree() const;

  /// Adds c * m in place. The monomial must be canonical for the table.
  void add_term(const Monomial& m, const Scalar& c);

  SuperPolynomial operator-() const;
  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial& operator*=(const Scalar& c);

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(SuperPolynomial a, const Scalar& c) { return a *= c; }
  friend SuperPolynomial operator*(const Scalar& c, SuperPolynomial a) { return a *= c; }
  /// Polynomials on the same table (or a table-less zero) with the same terms.
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);
  friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

  SuperPolynomial pow(unsigned n) const;
  /// Complex conjugation of the scalars (I -> -I).
  SuperPolynomial conj_i() const;
  SuperPolynomial with_ring(ScalarRing ring) const;

  /// Ring homomorphism fixing scalars: each listed symbol is replaced by its
  /// image, others are kept. Images of odd symbols are multiplied in canonical
  /// order, so they must be odd for the result to be meaningful.
  SuperPolynomial substitute(const std::map<std::uint32_t, SuperPolynomial>& images) const;

  /// Re-expresses the polynomial on another table that declares every symbol it
  /// uses (matched by name, in a compatible odd order).
  SuperPolynomial retable(const TablePtr& target) const;

  /// Writes p = sym(A) * g + r, where sym(A) is the product of the listed odd
  /// symbols in the given order and r has no term divisible by all of them.
  /// Returns g.
  SuperPolynomial left_cofactor(const std::vector<std::uint32_t>& odd_syms) const;

  /// Drops every term that contains one of the listed symbols.
  SuperPolynomial without(const std::vector<std::uint32_t>& syms) const;

  /// Canonical DSL text; "0" for zero.
  std::string str() const;

 private:
  TablePtr table_;
  ScalarRing ring_ = ScalarRing::Rationals;
  Terms terms_;

  void absorb_table(const SuperPolynomial& o);
};

/// Product of two monomials in the given table: returns the scalar factor
/// (sign, Clifford contractions) and the canonical monomial. A zero factor
/// means the product vanishes.
std::pair<Scalar, Monomial> multiply_monomials(const SymbolTable& table, const Monomial& a,
                                               const Monomial& b);

std::string monomial_str(const SymbolTable& table, const Monomial& m);

}  // namespace sg
