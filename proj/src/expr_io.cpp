#include "supergrass/expr_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "supergrass/superspace.hpp"

namespace sg {

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, std::string found)
    : Error([&] {
        std::string msg = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected ";
        bool first = true;
        for (const auto& e : expected) {
          msg += (first ? "" : " | ") + e;
          first = false;
        }
        return msg + ", found " + found;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnknownSymbolError::UnknownSymbolError(std::string name)
    : Error("unknown symbol '" + name + "'"), name_(std::move(name)) {}

namespace {

struct Token {
  enum class Kind { Number, Ident, Punct, End } kind = Kind::End;
  std::string text;
  std::size_t line = 1, column = 1;

  std::string describe() const {
    if (kind == Kind::End) return "end of input";
    return "'" + text + "'";
  }
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isdigit(c)) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      t.kind = Token::Kind::Number;
    } else if (std::isalpha(c)) {
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
    } else if (std::string("+-*^()[],").find(static_cast<char>(c)) != std::string::npos) {
      j = i + 1;
      t.kind = Token::Kind::Punct;
    } else {
      throw ParseError(line, col, {"number", "identifier", "operator"}, std::string("'") + s[i] + "'");
    }
    t.text = s.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const std::set<std::string> kAtomStart = {"number", "identifier", "'I'", "'('", "'['", "'D'", "'ber'", "'-'"};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  DslNode run() {
    auto n = expr();
    if (peek().kind != Token::Kind::End) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return n;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  bool is(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }
  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw ParseError(peek().line, peek().column, std::move(expected), peek().describe());
  }
  void expect(const char* p) {
    if (!is(p)) fail({std::string("'") + p + "'"});
    ++pos_;
  }
  std::string ident() {
    if (peek().kind != Token::Kind::Ident) fail({"identifier"});
    return toks_[pos_++].text;
  }

  DslNode expr() {
    DslNode sum;
    sum.kind = DslNode::Kind::Sum;
    sum.children.push_back(term());
    sum.minus.push_back(false);
    while (is("+") || is("-")) {
      const bool m = is("-");
      ++pos_;
      sum.children.push_back(term());
      sum.minus.push_back(m);
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  DslNode term() {
    if (is("-")) {
      ++pos_;
      DslNode n;
      n.kind = DslNode::Kind::Neg;
      n.children.push_back(term());
      return n;
    }
    DslNode prod;
    prod.kind = DslNode::Kind::Product;
    prod.children.push_back(power());
    while (is("*")) {
      ++pos_;
      prod.children.push_back(power());
    }
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  DslNode power() {
    auto base = atom();
    if (!is("^")) return base;
    ++pos_;
    if (peek().kind != Token::Kind::Number || peek().text.find('/') != std::string::npos)
      fail({"nonnegative integer"});
    DslNode n;
    n.kind = DslNode::Kind::Power;
    n.exponent = static_cast<unsigned>(std::stoul(toks_[pos_++].text));
    n.children.push_back(std::move(base));
    return n;
  }

  DslNode atom() {
    const Token& t = peek();
    DslNode n;
    if (t.kind == Token::Kind::Number) {
      n.kind = DslNode::Kind::Number;
      n.number = parse_rational(t.text);
      ++pos_;
      return n;
    }
    if (is("(")) {
      ++pos_;
      n = expr();
      expect(")");
      return n;
    }
    if (is("[")) {
      ++pos_;
      n.kind = DslNode::Kind::Bracket;
      n.children.push_back(expr());
      expect(",");
      n.children.push_back(expr());
      expect("]");
      if (is("(")) {
        ++pos_;
        n.children.push_back(expr());
        expect(")");
      }
      return n;
    }
    if (t.kind != Token::Kind::Ident) fail(kAtomStart);
    const std::string name = t.text;
    ++pos_;
    if (name == "I") {
      n.kind = DslNode::Kind::Imag;
      return n;
    }
    if (name == "D" && is("[")) {
      ++pos_;
      n.kind = DslNode::Kind::Apply;
      n.name = ident();
      expect("]");
      expect("(");
      n.children.push_back(expr());
      expect(")");
      return n;
    }
    if (name == "ber" && is("(")) {
      ++pos_;
      n.kind = DslNode::Kind::Berezin;
      n.children.push_back(expr());
      while (is(",")) {
        ++pos_;
        n.names.push_back(ident());
      }
      expect(")");
      return n;
    }
    n.kind = DslNode::Kind::Symbol;
    n.name = name;
    return n;
  }
};

bool needs_parens_in_product(const DslNode& n) {
  return n.kind == DslNode::Kind::Sum || n.kind == DslNode::Kind::Neg;
}

std::string print_rational(const Rational& q) { return to_string(q); }

// Natural order: "th2" < "th10"; digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

bool numbered(const std::string& s, const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0) return false;
  return std::all_of(s.begin() + static_cast<long>(prefix.size()), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

/// 0 even, 1 eps, 2 th, 3 et, 4 ps, 5 psi
int group_of(const std::string& s) {
  if (s == "eps") return 1;
  if (numbered(s, "th")) return 2;
  if (numbered(s, "et")) return 3;
  if (numbered(s, "ps") && s.size() > 2) return 4;
  if (s.rfind("psi", 0) == 0) {
    const auto base = s.substr(0, s.find('_'));
    if (numbered(base, "psi")) return 5;
  }
  return 0;
}

SuperPolynomial as_poly(const DslValue& v, const char* where) {
  if (const auto* p = std::get_if<SuperPolynomial>(&v)) return *p;
  throw Error(std::string(where) + " needs a polynomial, got the operator " + std::get<Derivation>(v).str());
}

}  // namespace

DslNode parse(const std::string& text) { return Parser(text).run(); }

std::string print(const DslNode& n) {
  using K = DslNode::Kind;
  switch (n.kind) {
    case K::Number:
      return print_rational(n.number);
    case K::Imag:
      return "I";
    case K::Symbol:
      return n.name;
    case K::Sum: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const auto c = print(n.children[i]);
        const auto k = n.children[i].kind;
        const bool wrap = k == K::Sum || (k == K::Neg && i > 0);
        const std::string body = wrap ? "(" + c + ")" : c;
        if (i == 0)
          out = n.minus[i] ? "-" + body : body;
        else
          out += (n.minus[i] ? " - " : " + ") + body;
      }
      return out;
    }
    case K::Neg: {
      const auto& c = n.children.front();
      const auto s = print(c);
      return "-" + (c.kind == K::Sum ? "(" + s + ")" : s);
    }
    case K::Product: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const auto s = print(n.children[i]);
        if (i) out += "*";
        out += needs_parens_in_product(n.children[i]) ? "(" + s + ")" : s;
      }
      return out;
    }
    case K::Power: {
      const auto& b = n.children.front();
      const auto s = print(b);
      const bool atomic =
          b.kind == K::Symbol || b.kind == K::Imag || (b.kind == K::Number && b.number.get_den() == 1);
      return (atomic ? s : "(" + s + ")") + "^" + std::to_string(n.exponent);
    }
    case K::Apply:
      return "D[" + n.name + "](" + print(n.children.front()) + ")";
    case K::Bracket: {
      std::string out = "[" + print(n.children[0]) + ", " + print(n.children[1]) + "]";
      if (n.children.size() == 3) out += "(" + print(n.children[2]) + ")";
      return out;
    }
    case K::Berezin: {
      std::string out = "ber(" + print(n.children.front());
      for (const auto& v : n.names) out += ", " + v;
      return out + ")";
    }
  }
  return {};
}

DslContext DslContext::supertime() {
  const auto st = sg::supertime();
  DslContext c;
  c.table = st.table;
  c.ops = {{"dt", st.dt}, {"D", st.D}, {"tau", st.tau}};
  return c;
}

DslContext DslContext::infer(const std::vector<std::string>& texts) {
  DslContext c;
  c.table = infer_table(texts);
  return c;
}

std::vector<std::string> identifiers(const std::string& text) {
  std::vector<std::string> out;
  const auto toks = lex(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (t.kind != Token::Kind::Ident || t.text == "I") continue;
    const bool next_open = i + 1 < toks.size() && toks[i + 1].kind == Token::Kind::Punct;
    if (t.text == "D" && next_open && toks[i + 1].text == "[") continue;
    if (t.text == "ber" && next_open && toks[i + 1].text == "(") continue;
    out.push_back(t.text);
  }
  return out;
}

TablePtr infer_table(const std::vector<std::string>& texts) {
  std::array<std::vector<std::string>, 6> groups;
  std::set<std::string> seen;
  for (const auto& text : texts)
    for (const auto& id : identifiers(text))
      if (seen.insert(id).second) groups[group_of(id)].push_back(id);
  SymbolTable st;
  for (int g = 0; g < 6; ++g) {
    auto& names = groups[g];
    std::sort(names.begin(), names.end(), natural_less);
    for (const auto& n : names) {
      if (g == 0)
        st.add_even(n);
      else if (g == 1)
        st.add_clifford(n, Rational(1));
      else
        st.add_odd(n);
    }
  }
  return freeze(std::move(st));
}

DslValue evaluate(const DslNode& n, const DslContext& ctx) {
  using K = DslNode::Kind;
  const auto& tab = ctx.table;
  switch (n.kind) {
    case K::Number:
      return SuperPolynomial::constant(tab, Scalar(n.number));
    case K::Imag:
      return SuperPolynomial::constant(tab, Scalar::I());
    case K::Symbol: {
      if (const auto s = tab->find(n.name)) return SuperPolynomial::variable(tab, *s);
      if (const auto it = ctx.ops.find(n.name); it != ctx.ops.end()) return it->second;
      throw UnknownSymbolError(n.name);
    }
    case K::Sum: {
      DslValue acc = evaluate(n.children.front(), ctx);
      if (n.minus.front()) acc = std::visit([](auto v) -> DslValue { return -v; }, acc);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        const auto v = evaluate(n.children[i], ctx);
        if (acc.index() != v.index()) throw Error("cannot add a polynomial and an operator");
        if (const auto* p = std::get_if<SuperPolynomial>(&acc)) {
          const auto& q = std::get<SuperPolynomial>(v);
          acc = n.minus[i] ? *p - q : *p + q;
        } else {
          const auto& a = std::get<Derivation>(acc);
          const auto& b = std::get<Derivation>(v);
          acc = n.minus[i] ? a - b : a + b;
        }
      }
      return acc;
    }
    case K::Neg: {
      const auto v = evaluate(n.children.front(), ctx);
      return std::visit([](auto x) -> DslValue { return -x; }, v);
    }
    case K::Product: {
      DslValue acc = evaluate(n.children.front(), ctx);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        const auto v = evaluate(n.children[i], ctx);
        const auto* p = std::get_if<SuperPolynomial>(&acc);
        if (!p) throw Error("an operator can only be applied with D[name](...) or [A, B](...)");
        if (const auto* q = std::get_if<SuperPolynomial>(&v))
          acc = *p * *q;
        else
          acc = *p * std::get<Derivation>(v);
      }
      return acc;
    }
    case K::Power:
      return as_poly(evaluate(n.children.front(), ctx), "^").pow(n.exponent);
    case K::Apply: {
      const auto arg = as_poly(evaluate(n.children.front(), ctx), "D[...]");
      if (const auto it = ctx.ops.find(n.name); it != ctx.ops.end()) return it->second(arg);
      if (const auto s = tab->find(n.name)) return Derivation::partial(tab, *s)(arg);
      throw UnknownSymbolError(n.name);
    }
    case K::Bracket: {
      const auto a = evaluate(n.children[0], ctx), b = evaluate(n.children[1], ctx);
      DslValue br;
      if (a.index() != b.index()) throw Error("bracket operands must both be operators or both polynomials");
      if (const auto* x = std::get_if<Derivation>(&a)) {
        br = super_bracket(*x, std::get<Derivation>(b));
      } else {
        const auto& p = std::get<SuperPolynomial>(a);
        const auto& q = std::get<SuperPolynomial>(b);
        const auto gp = p.grading(), gq = q.grading();
        if (gp == Grading::Mixed || gq == Grading::Mixed) throw ParityError("bracket of inhomogeneous polynomials");
        br = (gp == Grading::Odd && gq == Grading::Odd) ? p * q + q * p : p * q - q * p;
      }
      if (n.children.size() == 3) {
        const auto arg = as_poly(evaluate(n.children[2], ctx), "operator application");
        if (const auto* d = std::get_if<Derivation>(&br)) return (*d)(arg);
        throw Error("only an operator bracket can be applied");
      }
      return br;
    }
    case K::Berezin: {
      const auto f = as_poly(evaluate(n.children.front(), ctx), "ber");
      std::vector<std::uint32_t> odd;
      if (n.names.empty()) {
        for (std::uint32_t s = 0; s < tab->size(); ++s)
          if (numbered(tab->at(s).name, "th") && tab->at(s).kind == SymbolKind::OddGenerator) odd.push_back(s);
      } else {
        for (const auto& v : n.names) {
          const auto s = tab->find(v);
          if (!s) throw UnknownSymbolError(v);
          odd.push_back(*s);
        }
      }
      return berezin(f, odd);
    }
  }
  throw Error("unreachable syntax node");
}

DslValue evaluate(const std::string& text, const DslContext& ctx) { return evaluate(parse(text), ctx); }

SuperPolynomial parse_poly(const std::string& text, const TablePtr& table) {
  DslContext ctx;
  ctx.table = table;
  return as_poly(evaluate(text, ctx), "parse_poly");
}

std::string to_text(const DslValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

nlohmann::json to_json(const SuperPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json t;
    t["coeff"] = to_string(c.re());
    if (!c.is_real()) t["coeff_im"] = to_string(c.im());
    nlohmann::json even = nlohmann::json::object();
    for (const auto& [s, e] : m.even) even[p.table()->at(s).name] = e;
    t["even"] = even;
    nlohmann::json odd = nlohmann::json::array();
    for (auto s : m.odd) odd.push_back(p.table()->at(s).name);
    t["odd"] = odd;
    terms.push_back(std::move(t));
  }
  return {{"version", 1}, {"terms", terms}};
}

SuperPolynomial from_json(const nlohmann::json& j, const TablePtr& table) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error("polynomial JSON needs an object with a \"terms\" array");
  if (j.contains("version") && j["version"] != 1) throw UnsupportedError("unsupported polynomial JSON version");
  auto sym = [&](const std::string& name) {
    const auto s = table->find(name);
    if (!s) throw UnknownSymbolError(name);
    return *s;
  };
  SuperPolynomial out(table);
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t["coeff"].is_string()) throw Error("term without a string \"coeff\"");
    const Rational im = t.contains("coeff_im") ? parse_rational(t["coeff_im"].get<std::string>()) : Rational(0);
    SuperPolynomial term = SuperPolynomial::constant(table, Scalar(parse_rational(t["coeff"].get<std::string>()), im));
    if (t.contains("even"))
      for (const auto& [name, e] : t["even"].items()) {
        if (!e.is_number_unsigned() || e.get<unsigned>() == 0) throw Error("exponent of '" + name + "' must be >= 1");
        term = term * SuperPolynomial::variable(table, sym(name)).pow(e.get<unsigned>());
      }
    if (t.contains("odd"))
      for (const auto& name : t["odd"]) term = term * SuperPolynomial::variable(table, sym(name.get<std::string>()));
    out += term;
  }
  return out;
}

}  // namespace sg
