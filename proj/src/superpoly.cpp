#include "supergrass/superpoly.hpp"

#include <algorithm>
#include <numeric>

namespace sg {

std::uint32_t Monomial::even_degree() const {
  std::uint32_t d = 0;
  for (const auto& [s, e] : even) d += e;
  return d;
}

std::uint32_t Monomial::exponent(std::uint32_t sym) const {
  for (const auto& [s, e] : even)
    if (s == sym) return e;
  return 0;
}

bool Monomial::has_odd(std::uint32_t sym) const {
  return std::binary_search(odd.begin(), odd.end(), sym);
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.odd.size() != b.odd.size()) return a.odd.size() < b.odd.size();
  if (a.odd != b.odd) return a.odd < b.odd;
  const auto da = a.even_degree();
  const auto db = b.even_degree();
  if (da != db) return da < db;
  return a.even < b.even;
}

int permutation_sign(const std::vector<std::uint32_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

std::pair<Scalar, Monomial> multiply_monomials(const SymbolTable& table, const Monomial& a,
                                               const Monomial& b) {
  Monomial r;
  r.even.reserve(a.even.size() + b.even.size());
  {
    std::size_t i = 0, j = 0;
    while (i < a.even.size() || j < b.even.size()) {
      if (j == b.even.size() || (i < a.even.size() && a.even[i].first < b.even[j].first)) {
        r.even.push_back(a.even[i++]);
      } else if (i == a.even.size() || b.even[j].first < a.even[i].first) {
        r.even.push_back(b.even[j++]);
      } else {
        r.even.emplace_back(a.even[i].first, a.even[i].second + b.even[j].second);
        ++i;
        ++j;
      }
    }
  }
  Scalar factor(1);
  bool negative = false;
  const std::size_t na = a.odd.size();
  std::size_t i = 0, j = 0;
  r.odd.reserve(na + b.odd.size());
  while (i < na && j < b.odd.size()) {
    if (a.odd[i] < b.odd[j]) {
      r.odd.push_back(a.odd[i++]);
    } else if (b.odd[j] < a.odd[i]) {
      // b's factor jumps over the remaining factors of a.
      if ((na - i) % 2) negative = !negative;
      r.odd.push_back(b.odd[j++]);
    } else {
      const Symbol& s = table.at(a.odd[i]);
      if (s.kind != SymbolKind::CliffordGenerator) return {Scalar(0), {}};
      // Bring b's copy next to a's copy, then contract e*e = -B(e,e).
      if ((na - i - 1) % 2) negative = !negative;
      if (sgn(s.square) == 0) return {Scalar(0), {}};
      factor *= Scalar(-s.square);
      ++i;
      ++j;
    }
  }
  while (i < na) r.odd.push_back(a.odd[i++]);
  while (j < b.odd.size()) r.odd.push_back(b.odd[j++]);
  if (negative) factor = -factor;
  return {factor, std::move(r)};
}

SuperPolynomial::SuperPolynomial(TablePtr table, ScalarRing ring)
    : table_(std::move(table)), ring_(ring) {}

SuperPolynomial SuperPolynomial::constant(TablePtr table, const Scalar& c) {
  SuperPolynomial p(std::move(table));
  p.add_term(Monomial{}, c);
  return p;
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, std::uint32_t sym) {
  const Symbol& s = table->at(sym);
  Monomial m;
  if (s.is_even())
    m.even.emplace_back(sym, 1);
  else
    m.odd.push_back(sym);
  return term(std::move(table), Scalar(1), std::move(m));
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, const std::string& name) {
  const auto i = table->index(name);
  return variable(std::move(table), i);
}

SuperPolynomial SuperPolynomial::term(TablePtr table, const Scalar& c, Monomial m) {
  SuperPolynomial p(std::move(table));
  p.add_term(m, c);
  return p;
}

void SuperPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (!c.is_real()) ring_ = ScalarRing::GaussianRationals;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SuperPolynomial::absorb_table(const SuperPolynomial& o) {
  if (!o.table_) return;
  if (!table_) {
    table_ = o.table_;
    return;
  }
  if (!same_table(table_, o.table_)) throw TableMismatchError("operands use different symbol tables");
}

Grading SuperPolynomial::grading() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) (m.parity() == Parity::Even ? even : odd) = true;
  if (even && odd) return Grading::Mixed;
  if (even) return Grading::Even;
  if (odd) return Grading::Odd;
  return Grading::Both;
}

bool SuperPolynomial::is_even() const {
  const auto g = grading();
  return g == Grading::Even || g == Grading::Both;
}

bool SuperPolynomial::is_odd() const {
  const auto g = grading();
  return g == Grading::Odd || g == Grading::Both;
}

SuperPolynomial SuperPolynomial::even_part() const {
  SuperPolynomial r(table_, ring_);
  for (const auto& [m, c] : terms_)
    if (m.parity() == Parity::Even) r.terms_.emplace(m, c);
  return r;
}

SuperPolynomial SuperPolynomial::odd_part() const {
  SuperPolynomial r(table_, ring_);
  for (const auto& [m, c] : terms_)
    if (m.parity() == Parity::Odd) r.terms_.emplace(m, c);
  return r;
}

bool SuperPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar SuperPolynomial::constant_term() const { return coefficient(Monomial{}); }

Scalar SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool SuperPolynomial::depends_on(std::uint32_t sym) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(sym) > 0 || m.has_odd(sym)) return true;
  return false;
}

int SuperPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int>(m.even_degree() + m.odd.size()));
  return d;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  absorb_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  if (o.ring_ == ScalarRing::GaussianRationals) ring_ = o.ring_;
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  absorb_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  if (o.ring_ == ScalarRing::GaussianRationals) ring_ = o.ring_;
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (!c.is_real()) ring_ = ScalarRing::GaussianRationals;
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial r(a.table_, a.ring_);
  r.absorb_table(b);
  if (b.ring_ == ScalarRing::GaussianRationals) r.ring_ = b.ring_;
  if (a.is_zero() || b.is_zero()) return r;
  const SymbolTable& t = *r.table_;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [f, m] = multiply_monomials(t, ma, mb);
      if (f.is_zero()) continue;
      f *= ca;
      f *= cb;
      r.add_term(m, f);
    }
  }
  return r;
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (a.table_ && b.table_ && !same_table(a.table_, b.table_)) return false;
  return a.terms_ == b.terms_;
}

SuperPolynomial SuperPolynomial::pow(unsigned n) const {
  SuperPolynomial r = constant(table_, Scalar(1));
  SuperPolynomial base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return r;
}

SuperPolynomial SuperPolynomial::conj_i() const {
  SuperPolynomial r(table_, ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
  return r;
}

SuperPolynomial SuperPolynomial::with_ring(ScalarRing ring) const {
  SuperPolynomial r(*this);
  if (ring == ScalarRing::Rationals)
    for (const auto& [m, c] : terms_)
      if (!c.is_real()) throw Error("polynomial has non-real coefficients");
  r.ring_ = ring;
  return r;
}

SuperPolynomial SuperPolynomial::substitute(
    const std::map<std::uint32_t, SuperPolynomial>& images) const {
  SuperPolynomial r(table_, ring_);
  for (const auto& [_, img] : images) r.absorb_table(img);
  for (const auto& [m, c] : terms_) {
    SuperPolynomial t = constant(r.table_, c);
    Monomial kept;
    for (const auto& [s, e] : m.even) {
      auto it = images.find(s);
      if (it == images.end())
        kept.even.emplace_back(s, e);
      else
        t = t * it->second.pow(e);
    }
    if (!kept.even.empty()) t = t * term(r.table_, Scalar(1), kept);
    for (auto s : m.odd) {
      auto it = images.find(s);
      t = t * (it == images.end() ? variable(r.table_, s) : it->second);
    }
    r += t;
  }
  return r;
}

SuperPolynomial SuperPolynomial::retable(const TablePtr& target) const {
  if (same_table(table_, target)) {
    SuperPolynomial r(*this);
    r.table_ = target;
    return r;
  }
  SuperPolynomial r(target, ring_);
  for (const auto& [m, c] : terms_) {
    Monomial n;
    for (const auto& [s, e] : m.even) n.even.emplace_back(target->index(table_->at(s).name), e);
    std::sort(n.even.begin(), n.even.end());
    for (auto s : m.odd) n.odd.push_back(target->index(table_->at(s).name));
    std::vector<std::uint32_t> order(n.odd.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return n.odd[x] < n.odd[y]; });
    const int sign = permutation_sign(order);
    std::sort(n.odd.begin(), n.odd.end());
    r.add_term(n, sign > 0 ? c : -c);
  }
  return r;
}

SuperPolynomial SuperPolynomial::left_cofactor(const std::vector<std::uint32_t>& odd_syms) const {
  SuperPolynomial r(table_, ring_);
  for (const auto& [m, c] : terms_) {
    bool all = std::all_of(odd_syms.begin(), odd_syms.end(), [&](auto s) { return m.has_odd(s); });
    if (!all) continue;
    // Target order: the listed symbols first (in the given order), then the rest.
    std::vector<std::uint32_t> target = odd_syms;
    Monomial rest;
    rest.even = m.even;
    for (auto s : m.odd)
      if (std::find(odd_syms.begin(), odd_syms.end(), s) == odd_syms.end()) {
        target.push_back(s);
        rest.odd.push_back(s);
      }
    // perm[i] = position in m.odd of the i-th factor of the target order.
    std::vector<std::uint32_t> perm;
    for (auto s : target)
      perm.push_back(static_cast<std::uint32_t>(
          std::lower_bound(m.odd.begin(), m.odd.end(), s) - m.odd.begin()));
    const int sign = permutation_sign(perm);
    r.add_term(rest, sign > 0 ? c : -c);
  }
  return r;
}

SuperPolynomial SuperPolynomial::without(const std::vector<std::uint32_t>& syms) const {
  SuperPolynomial r(table_, ring_);
  for (const auto& [m, c] : terms_) {
    bool hit = false;
    for (auto s : syms) hit = hit || m.exponent(s) > 0 || m.has_odd(s);
    if (!hit) r.terms_.emplace(m, c);
  }
  return r;
}

std::string monomial_str(const SymbolTable& table, const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : m.even) {
    if (!out.empty()) out += "*";
    out += table.at(s).name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  for (auto s : m.odd) {
    if (!out.empty()) out += "*";
    out += table.at(s).name;
  }
  return out;
}

std::string SuperPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string t;
    if (m.is_one()) {
      t = to_string(c);
      // A lone complex constant needs no grouping.
      if (terms_.size() == 1 && !c.is_real() && t.front() == '(') t = t.substr(1, t.size() - 2);
    } else {
      const std::string f = monomial_str(*table_, m);
      if (c.is_one())
        t = f;
      else if (c == Scalar(-1))
        t = "-" + f;
      else
        t = to_string(c) + "*" + f;
    }
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace sg
