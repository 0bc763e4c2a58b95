#include "supergrass/symbols.hpp"

namespace sg {

std::uint32_t SymbolTable::add(Symbol s) {
  if (s.name.empty()) throw Error("empty symbol name");
  if (by_name_.count(s.name)) throw Error("duplicate symbol '" + s.name + "'");
  const auto i = static_cast<std::uint32_t>(symbols_.size());
  by_name_.emplace(s.name, i);
  symbols_.push_back(std::move(s));
  return i;
}

std::uint32_t SymbolTable::add_even(const std::string& name) {
  return add({name, SymbolKind::EvenCoordinate, 0, {}, {}});
}

std::uint32_t SymbolTable::add_odd(const std::string& name) {
  return add({name, SymbolKind::OddGenerator, 0, {}, {}});
}

std::uint32_t SymbolTable::add_clifford(const std::string& name, const Rational& square) {
  return add({name, SymbolKind::CliffordGenerator, square, {}, {}});
}

std::string SymbolTable::jet_name(const std::string& field, const std::vector<std::string>& coords,
                                  const std::vector<std::uint32_t>& counts) {
  std::string suffix;
  for (std::size_t c = 0; c < coords.size(); ++c)
    for (std::uint32_t r = 0; r < counts[c]; ++r) suffix += coords[c];
  return suffix.empty() ? field : field + "_" + suffix;
}

std::uint32_t SymbolTable::add_jet(const std::string& field, Parity parity,
                                   const std::vector<std::string>& coords,
                                   const std::vector<std::uint32_t>& counts) {
  if (coords.size() != counts.size()) throw Error("jet counts do not match coordinates");
  for (const auto& c : coords) {
    auto it = by_name_.find(c);
    if (it == by_name_.end() || symbols_[it->second].kind != SymbolKind::EvenCoordinate)
      throw Error("jet of '" + field + "' references undeclared coordinate '" + c + "'");
  }
  Symbol s{jet_name(field, coords, counts),
           parity == Parity::Even ? SymbolKind::EvenFieldJet : SymbolKind::OddFieldJet,
           0,
           field,
           counts};
  return add(std::move(s));
}

std::optional<std::uint32_t> SymbolTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t SymbolTable::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error("unknown symbol '" + name + "'");
  return *i;
}

bool operator==(const SymbolTable& a, const SymbolTable& b) {
  if (a.symbols_.size() != b.symbols_.size()) return false;
  for (std::size_t i = 0; i < a.symbols_.size(); ++i) {
    const auto& x = a.symbols_[i];
    const auto& y = b.symbols_[i];
    if (x.name != y.name || x.kind != y.kind || x.square != y.square) return false;
  }
  return true;
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace sg
