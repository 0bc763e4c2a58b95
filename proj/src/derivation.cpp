#include "supergrass/derivation.hpp"

namespace sg {

Derivation::Derivation(TablePtr table, Parity parity, std::string label)
    : table_(std::move(table)), parity_(parity), label_(std::move(label)) {}

Derivation Derivation::partial(TablePtr table, std::uint32_t sym) {
  const Symbol& s = table->at(sym);
  Derivation d(table, s.parity(), "d/d" + s.name);
  d.set_image(sym, SuperPolynomial::constant(table, Scalar(1)));
  return d;
}

Derivation Derivation::partial(TablePtr table, const std::string& name) {
  const auto i = table->index(name);
  return partial(std::move(table), i);
}

void Derivation::set_image(std::uint32_t sym, SuperPolynomial image) {
  if (image.table() && !same_table(image.table(), table_))
    throw TableMismatchError("derivation image uses a different symbol table");
  if (image.is_zero()) {
    images_.erase(sym);
    return;
  }
  images_[sym] = std::move(image);
}

SuperPolynomial Derivation::image(std::uint32_t sym) const {
  auto it = images_.find(sym);
  return it == images_.end() ? SuperPolynomial(table_) : it->second;
}

bool Derivation::is_homogeneous() const {
  for (const auto& [s, img] : images_) {
    const Parity want = parity_ + table_->at(s).parity();
    if (want == Parity::Even ? !img.is_even() : !img.is_odd()) return false;
  }
  return true;
}

SuperPolynomial Derivation::operator()(const SuperPolynomial& f) const {
  if (f.table() && !same_table(f.table(), table_))
    throw TableMismatchError("derivation applied to a polynomial on another table");
  SuperPolynomial out(table_);
  const bool odd_x = parity_ == Parity::Odd;
  for (const auto& [m, c] : f.terms()) {
    if (!undefined_.empty()) {
      for (const auto& [s, e] : m.even)
        if (undefined_.count(s))
          throw UnsupportedError("derivation '" + label_ + "' undefined on " + table_->at(s).name);
      for (auto s : m.odd)
        if (undefined_.count(s))
          throw UnsupportedError("derivation '" + label_ + "' undefined on " + table_->at(s).name);
    }
    // Even factors commute with everything: X(E) O.
    for (std::size_t k = 0; k < m.even.size(); ++k) {
      auto it = images_.find(m.even[k].first);
      if (it == images_.end()) continue;
      Monomial rest = m;
      if (--rest.even[k].second == 0) rest.even.erase(rest.even.begin() + static_cast<long>(k));
      const Scalar coef = c * Scalar(static_cast<long>(m.even[k].second));
      Monomial even_rest;
      even_rest.even = rest.even;
      Monomial odd_rest;
      odd_rest.odd = rest.odd;
      out += SuperPolynomial::term(table_, coef, even_rest) * it->second *
             SuperPolynomial::term(table_, Scalar(1), odd_rest);
    }
    // Odd factors: X passes p odd factors before reaching position p.
    for (std::size_t p = 0; p < m.odd.size(); ++p) {
      auto it = images_.find(m.odd[p]);
      if (it == images_.end()) continue;
      Monomial prefix;
      prefix.even = m.even;
      prefix.odd.assign(m.odd.begin(), m.odd.begin() + static_cast<long>(p));
      Monomial suffix;
      suffix.odd.assign(m.odd.begin() + static_cast<long>(p) + 1, m.odd.end());
      const Scalar coef = (odd_x && p % 2) ? -c : c;
      out += SuperPolynomial::term(table_, coef, prefix) * it->second *
             SuperPolynomial::term(table_, Scalar(1), suffix);
    }
  }
  return out;
}

Derivation Derivation::operator-() const {
  Derivation r(*this);
  for (auto& [s, img] : r.images_) img = -img;
  return r;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (!table_) {
    *this = o;
    return *this;
  }
  if (!same_table(table_, o.table_)) throw TableMismatchError("derivations on different tables");
  if (!images_.empty() && !o.images_.empty() && parity_ != o.parity_)
    throw ParityError("sum of derivations of different parity");
  if (images_.empty()) parity_ = o.parity_;
  for (const auto& [s, img] : o.images_) set_image(s, image(s) + img);
  for (auto s : o.undefined_) undefined_.insert(s);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) { return *this += -o; }

Derivation operator*(const Scalar& c, const Derivation& d) {
  Derivation r(d.table_, d.parity_, d.label_);
  for (const auto& [s, img] : d.images_) r.set_image(s, c * img);
  r.undefined_ = d.undefined_;
  return r;
}

Derivation operator*(const SuperPolynomial& g, const Derivation& d) {
  const Grading gr = g.grading();
  if (gr == Grading::Mixed) throw ParityError("left factor of a derivation must be homogeneous");
  const Parity pg = gr == Grading::Odd ? Parity::Odd : Parity::Even;
  Derivation r(d.table_, pg + d.parity_, d.label_);
  for (const auto& [s, img] : d.images_) r.set_image(s, g * img);
  r.undefined_ = d.undefined_;
  return r;
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.images_.size() != b.images_.size()) return false;
  for (const auto& [s, img] : a.images_) {
    auto it = b.images_.find(s);
    if (it == b.images_.end() || it->second != img) return false;
  }
  return a.images_.empty() || a.parity_ == b.parity_;
}

std::string Derivation::str() const {
  if (images_.empty()) return "0";
  std::string out;
  for (const auto& [s, img] : images_) {
    const std::string d = "d/d" + table_->at(s).name;
    std::string t;
    if (img.is_constant()) {
      const Scalar c = img.constant_term();
      if (c.is_one())
        t = d;
      else if (c == Scalar(-1))
        t = "-" + d;
      else
        t = to_string(c) + "*" + d;
    } else if (img.size() == 1) {
      t = img.str() + "*" + d;
    } else {
      t = "(" + img.str() + ")*" + d;
    }
    if (out.empty())
      out = t;
    else if (t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

Derivation super_bracket(const Derivation& x, const Derivation& y,
                         const std::optional<std::vector<std::uint32_t>>& on) {
  if (!same_table(x.table(), y.table())) throw TableMismatchError("bracket of derivations on different tables");
  if (!x.is_homogeneous() || !y.is_homogeneous())
    throw ParityError("super bracket needs homogeneous derivations");
  Derivation z(x.table(), x.parity() + y.parity(),
               "[" + x.label() + "," + y.label() + "]");
  const bool minus = !(x.parity() == Parity::Odd && y.parity() == Parity::Odd);
  std::set<std::uint32_t> gens;
  if (on) {
    gens.insert(on->begin(), on->end());
  } else {
    for (const auto& [s, _] : x.images()) gens.insert(s);
    for (const auto& [s, _] : y.images()) gens.insert(s);
  }
  for (auto s : gens) {
    const SuperPolynomial xy = x(y.image(s));
    const SuperPolynomial yx = y(x.image(s));
    z.set_image(s, minus ? xy - yx : xy + yx);
  }
  return z;
}

bool jacobi_check(const Derivation& x, const Derivation& y, const Derivation& z) {
  auto sgn = [](const Derivation& a, const Derivation& b) {
    return (a.parity() == Parity::Odd && b.parity() == Parity::Odd) ? Scalar(-1) : Scalar(1);
  };
  const Derivation sum = sgn(x, z) * super_bracket(x, super_bracket(y, z)) +
                         sgn(y, x) * super_bracket(y, super_bracket(z, x)) +
                         sgn(z, y) * super_bracket(z, super_bracket(x, y));
  return sum.images().empty();
}

SuperPolynomial apply_power(const Derivation& x, const SuperPolynomial& f, unsigned n) {
  SuperPolynomial r = f;
  for (unsigned i = 0; i < n && !r.is_zero(); ++i) r = x(r);
  return r;
}

TablePtr forms_table(unsigned n) {
  SymbolTable t;
  for (unsigned i = 1; i <= n; ++i) t.add_even("x" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i) t.add_odd("dx" + std::to_string(i));
  return freeze(std::move(t));
}

CartanTriple cartan_triple(const TablePtr& forms, const std::vector<SuperPolynomial>& xi) {
  const std::size_t n = xi.size();
  if (forms->size() != 2 * n) throw PreconditionError("forms table does not match the vector field");
  for (const auto& c : xi)
    for (const auto& [m, v] : c.terms()) {
      if (!m.odd.empty()) throw UnsupportedError("vector field coefficients must be polynomials in x");
      for (const auto& [s, e] : m.even)
        if (s >= n) throw UnsupportedError("vector field coefficients must be polynomials in x");
    }
  Derivation d(forms, Parity::Odd, "d");
  Derivation iota(forms, Parity::Odd, "iota");
  for (std::uint32_t i = 0; i < n; ++i) {
    d.set_image(i, SuperPolynomial::variable(forms, i + static_cast<std::uint32_t>(n)));
    iota.set_image(i + static_cast<std::uint32_t>(n), xi[i].retable(forms));
  }
  Derivation lie = super_bracket(d, iota);
  // The bracket only records generators moved by d or iota; Lie_xi is supported there.
  lie.set_label("Lie");
  return {d, iota, lie};
}

}  // namespace sg
