// Symbols with parity, grouped into an immutable table that fixes the canonical
// order of odd factors.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supergrass/scalar.hpp"

namespace sg {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int bit(Parity p) { return static_cast<int>(p); }

enum class SymbolKind : std::uint8_t {
  EvenCoordinate,
  OddGenerator,
  CliffordGenerator,
  EvenFieldJet,
  OddFieldJet,
};

struct Symbol {
  std::string name;
  SymbolKind kind;
  /// B(e, e) for a Clifford generator, so that e*e = -square. Zero otherwise.
  Rational square;
  /// Field jets only: base field name and derivative counts per coordinate of
  /// the owning jet coordinate list (see SymbolTable::add_jet).
  std::string field;
  std::vector<std::uint32_t> jet;

  Parity parity() const {
    return kind == SymbolKind::EvenCoordinate || kind == SymbolKind::EvenFieldJet ? Parity::Even
                                                                                   : Parity::Odd;
  }
  bool is_even() const { return parity() == Parity::Even; }
};

/// Ordered collection of uniquely named symbols. Build it, then freeze it into a
/// TablePtr; polynomials and derivations hold the frozen pointer.
class SymbolTable {
 public:
  std::uint32_t add_even(const std::string& name);
  std::uint32_t add_odd(const std::string& name);
  std::uint32_t add_clifford(const std::string& name, const Rational& square);
  /// Registers the jet `field` differentiated `counts[c]` times along
  /// `coords[c]`. Every coordinate must already be an even coordinate. The jet
  /// name is the field name, then "_" and the coordinate names repeated by
  /// count (no suffix for the undifferentiated field).
  std::uint32_t add_jet(const std::string& field, Parity parity,
                        const std::vector<std::string>& coords,
                        const std::vector<std::uint32_t>& counts);

  static std::string jet_name(const std::string& field, const std::vector<std::string>& coords,
                              const std::vector<std::uint32_t>& counts);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& at(std::uint32_t i) const { return symbols_.at(i); }
  std::optional<std::uint32_t> find(const std::string& name) const;
  /// Throws Error naming the missing symbol.
  std::uint32_t index(const std::string& name) const;

  friend bool operator==(const SymbolTable& a, const SymbolTable& b);

 private:
  std::uint32_t add(Symbol s);

  std::vector<Symbol> symbols_;
  std::map<std::string, std::uint32_t> by_name_;
};

using TablePtr = std::shared_ptr<const SymbolTable>;

inline TablePtr freeze(SymbolTable t) { return std::make_shared<const SymbolTable>(std::move(t)); }

/// True when both tables describe the same symbols in the same order.
bool same_table(const TablePtr& a, const TablePtr& b);

}  // namespace sg
