// Text DSL and JSON for superpolynomials and derivations.
//
//   expr    = term { ("+" | "-") term } ;
//   term    = ["-"] power { "*" power } ;
//   power   = atom [ "^" integer ] ;
//   atom    = rational | "I" | ident | "(" expr ")"
//           | "[" expr "," expr "]" [ "(" expr ")" ]
//           | "D" "[" ident "]" "(" expr ")"
//           | "ber" "(" expr { "," ident } ")" ;
//   rational = digits [ "/" digits ] ;
//   ident   = letter { letter | digit | "_" } ;
//
// Whitespace and newlines are ignored. The grammar is LL(1).
#pragma once

#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "supergrass/derivation.hpp"

namespace sg {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, std::string found);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_, column_;
  std::set<std::string> expected_;
  std::string found_;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct DslNode {
  enum class Kind { Number, Imag, Symbol, Sum, Neg, Product, Power, Apply, Bracket, Berezin };
  Kind kind = Kind::Number;
  Rational number;
  std::string name;  // Symbol, Apply
  unsigned exponent = 0;
  /// Sum: children with per-child sign in `minus`.
  std::vector<DslNode> children;
  std::vector<bool> minus;
  std::vector<std::string> names;  // Berezin variables
};

DslNode parse(const std::string& text);
/// Fully parenthesized-where-needed rendering of the syntax tree.
std::string print(const DslNode& node);

/// Symbols plus named operators (usable as bare identifiers in brackets and as
/// D[name](...)). Any other name in D[...] is the partial derivative along it.
struct DslContext {
  TablePtr table;
  std::map<std::string, Derivation> ops;

  /// t, th, et1, et2 with operators dt, D, tau.
  static DslContext supertime();
  /// Table declared from the identifiers in `texts` (see infer_table).
  static DslContext infer(const std::vector<std::string>& texts);
};

/// Parity by name: th<i>, et<i>, ps<i> and psi... jets are odd, eps is the
/// Clifford generator with eps*eps = -1, the rest is even. Declaration order:
/// even names, then eps, th, et, ps, psi (alphabetical with numeric suffixes
/// in numeric order inside each group).
TablePtr infer_table(const std::vector<std::string>& texts);
std::vector<std::string> identifiers(const std::string& text);

using DslValue = std::variant<SuperPolynomial, Derivation>;
DslValue evaluate(const DslNode& node, const DslContext& ctx);
DslValue evaluate(const std::string& text, const DslContext& ctx);
/// Parses and evaluates; throws Error if the result is an operator.
SuperPolynomial parse_poly(const std::string& text, const TablePtr& table);
std::string to_text(const DslValue& v);

/// {"version": 1, "terms": [{"coeff": "p/q", "even": {"x": 2}, "odd": ["th1"]}]}
/// with "coeff_im" added for non-real Gaussian coefficients.
nlohmann::json to_json(const SuperPolynomial& p);
SuperPolynomial from_json(const nlohmann::json& j, const TablePtr& table);

}  // namespace sg
