#include "supergrass/sl4c.hpp"

namespace sg {

namespace {

constexpr std::array<std::array<unsigned, 2>, 6> kPairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

std::string pair_name(unsigned n) { return std::to_string(kPairs[n][0]) + std::to_string(kPairs[n][1]); }

/// a + b i + (c + d i) j = a + b i + c j + d k
KRational quat_right_j(const Scalar& p, const Scalar& q) {
  return KRational(DivAlg::H, {p.re(), p.im(), q.re(), q.im()});
}

/// a + b i + j (c + d i) = a + b i + c j - d k
KRational quat_left_j(const Scalar& p, const Scalar& q) {
  return KRational(DivAlg::H, {p.re(), p.im(), q.re(), -q.im()});
}

std::string biv_str(const Bivector& y) {
  std::string s;
  for (unsigned n = 0; n < 6; ++n) s += (n ? ", y" : "y") + pair_name(n) + "=" + to_string(y[n]);
  return s;
}

}  // namespace

unsigned biv_index(unsigned a, unsigned b) {
  for (unsigned n = 0; n < 6; ++n)
    if (kPairs[n][0] == a && kPairs[n][1] == b) return n;
  throw PreconditionError("bivector index needs 1 <= a < b <= 4");
}

std::array<KRational, 2> to_quaternions(const C4& u) { return {quat_left_j(u[0], u[2]), quat_left_j(u[1], u[3])}; }

C4 sigma(const C4& u) { return {-u[2].conj(), -u[3].conj(), u[0].conj(), u[1].conj()}; }

Bivector wedge(const C4& u, const C4& v) {
  Bivector y;
  for (unsigned n = 0; n < 6; ++n) {
    const unsigned a = kPairs[n][0] - 1, b = kPairs[n][1] - 1;
    y[n] = u[a] * v[b] - u[b] * v[a];
  }
  return y;
}

Bivector operator+(const Bivector& a, const Bivector& b) {
  Bivector r;
  for (unsigned n = 0; n < 6; ++n) r[n] = a[n] + b[n];
  return r;
}

Bivector operator*(const Scalar& c, const Bivector& a) {
  Bivector r;
  for (unsigned n = 0; n < 6; ++n) r[n] = c * a[n];
  return r;
}

Bivector wedge_sigma_formulas(const C4& u) {
  auto c = [](const Scalar& s) { return s.conj(); };
  Bivector y;
  y[biv_index(1, 2)] = u[1] * c(u[2]) - u[0] * c(u[3]);
  y[biv_index(1, 3)] = Scalar(u[0].norm_sq() + u[2].norm_sq());
  y[biv_index(1, 4)] = u[0] * c(u[1]) + u[3] * c(u[2]);
  y[biv_index(2, 3)] = u[1] * c(u[0]) + u[2] * c(u[3]);
  y[biv_index(2, 4)] = Scalar(u[1].norm_sq() + u[3].norm_sq());
  y[biv_index(3, 4)] = u[2] * c(u[1]) - u[3] * c(u[0]);
  return y;
}

bool satisfies_reality(const Bivector& y) {
  return y[biv_index(1, 2)].conj() == y[biv_index(3, 4)] && y[biv_index(1, 4)].conj() == y[biv_index(2, 3)] &&
         y[biv_index(1, 3)].is_real() && y[biv_index(2, 4)].is_real();
}

Bivector P(const Hermitian2& h) {
  if (h.tag != DivAlg::H) throw PreconditionError("P is defined on quaternionic Hermitian matrices");
  Bivector y;
  const Scalar z12(h.z[0], h.z[1]), z34(h.z[2], h.z[3]);
  y[biv_index(1, 2)] = z34;
  y[biv_index(1, 3)] = Scalar(h.a);
  y[biv_index(1, 4)] = z12;
  y[biv_index(2, 3)] = z12.conj();
  y[biv_index(2, 4)] = Scalar(h.d);
  y[biv_index(3, 4)] = z34.conj();
  return y;
}

Hermitian2 P_inverse(const Bivector& y) {
  if (!satisfies_reality(y)) throw PreconditionError("bivector violates the reality conditions: " + biv_str(y));
  Hermitian2 h;
  h.tag = DivAlg::H;
  h.a = y[biv_index(1, 3)].re();
  h.d = y[biv_index(2, 4)].re();
  h.z = quat_right_j(y[biv_index(1, 4)], y[biv_index(1, 2)]);
  // The lower-left entry y23 - j y34 must be conj(z).
  if (quat_left_j(y[biv_index(2, 3)], -y[biv_index(3, 4)]) != h.z.conj())
    throw Error("P^{-1}: lower-left entry is not conj of upper-right");
  return h;
}

Hermitian2 x_block(const NilMatrix5& m) {
  auto rat = [](const KPoly& e) {
    KRational out(e.tag(), Rational(0));
    for (unsigned i = 0; i < e.size(); ++i) {
      if (!e[i].is_constant() || !e[i].constant_term().is_real())
        throw PreconditionError("X block entry is not a real constant");
      out[i] = e[i].constant_term().re();
    }
    return out;
  };
  Hermitian2 h;
  h.tag = m.ring().tag;
  const auto a = rat(m(1, 4)), d = rat(m(2, 5));
  h.z = rat(m(1, 5));
  if (a.im() != KRational(h.tag, Rational(0)) || d.im() != KRational(h.tag, Rational(0)) ||
      rat(m(2, 4)) != h.z.conj())
    throw PreconditionError("X block is not Hermitian");
  h.a = a[0];
  h.d = d[0];
  return h;
}

Scalar bilinear_B(const Bivector& y, const Bivector& yp) {
  SymbolTable st;
  std::array<std::uint32_t, 4> e{};
  for (unsigned i = 0; i < 4; ++i) e[i] = st.add_odd("e" + std::to_string(i + 1));
  const auto t = freeze(std::move(st));
  auto form = [&](const Bivector& b) {
    SuperPolynomial Y(t);
    for (unsigned n = 0; n < 6; ++n)
      Y += b[n] * (SuperPolynomial::variable(t, e[kPairs[n][0] - 1]) *
                   SuperPolynomial::variable(t, e[kPairs[n][1] - 1]));
    return Y;
  };
  const auto top = (form(y) * form(yp)).left_cofactor({e[0], e[1], e[2], e[3]});
  return top.constant_term();
}

namespace {

NilMatrix5 bracket_of(const C4& u, const C4& v) {
  const auto r = MatrixRing::make(DivAlg::H);
  const auto l = to_quaternions(u), m = to_quaternions(v);
  const auto Ql = q_matrix(r, 1, to_number(l[0])) + q_matrix(r, 2, to_number(l[1]));
  const auto Qm = q_matrix(r, 1, to_number(m[0])) + q_matrix(r, 2, to_number(m[1]));
  return anticomm(Ql, Qm);
}

}  // namespace

CheckOutcome bridge_check(const C4& u) {
  const auto lhs = P(x_block(bracket_of(u, u)));
  const auto rhs = Scalar(-2) * wedge(u, sigma(u));
  if (lhs != rhs) return CheckOutcome::fail("P([Q,Q]) = " + biv_str(lhs) + " but -2 U^sigma(U) = " + biv_str(rhs));
  return {};
}

CheckOutcome polarization_check(const C4& u, const C4& v) {
  const auto lhs = P(x_block(bracket_of(u, v)));
  const auto rhs = Scalar(-1) * (wedge(u, sigma(v)) + wedge(v, sigma(u)));
  if (lhs != rhs) return CheckOutcome::fail("P([Q_U,Q_V]) = " + biv_str(lhs) + " vs " + biv_str(rhs));
  return {};
}

CheckOutcome coordinate_table_check(const C4& u) {
  const auto y = wedge(u, sigma(u));
  if (y != wedge_sigma_formulas(u)) return CheckOutcome::fail("wedge " + biv_str(y) + " differs from the table");
  if (!satisfies_reality(y)) return CheckOutcome::fail("reality conditions fail: " + biv_str(y));
  const auto l = to_quaternions(u);
  const auto h = P_inverse(y);
  if (h.a != norm_sq(l[0]) || h.d != norm_sq(l[1]) || h.z != l[0] * l[1].conj())
    return CheckOutcome::fail("P^{-1}(U^sigma(U)) is not the lambda block");
  if (P(h) != y) return CheckOutcome::fail("P(P^{-1}(y)) != y");
  return {};
}

CheckOutcome derivative_dictionary_check() {
  SymbolTable st;
  std::array<std::uint32_t, 6> y{};
  for (unsigned n = 0; n < 6; ++n) y[n] = st.add_even("y" + pair_name(n));
  const auto t = st.add_even("t"), x = st.add_even("x");
  std::array<std::uint32_t, 4> z{};
  for (unsigned c = 0; c < 4; ++c) z[c] = st.add_even("z" + std::to_string(c + 1));
  const auto tab = freeze(std::move(st));
  auto v = [&](std::uint32_t s) { return SuperPolynomial::variable(tab, s); };
  auto Y = [&](unsigned a, unsigned b) { return v(y[biv_index(a, b)]); };
  const Scalar half(Rational(1, 2)), ihalf(Rational(0), Rational(1, 2)), mi(Rational(0), Rational(-1));
  std::map<std::uint32_t, SuperPolynomial> fwd, inv;
  fwd[t] = Y(1, 3) + Y(2, 4);
  fwd[x] = Y(1, 3) - Y(2, 4);
  fwd[z[0]] = Y(1, 4) + Y(2, 3);
  fwd[z[1]] = mi * (Y(1, 4) - Y(2, 3));
  fwd[z[2]] = Y(1, 2) + Y(3, 4);
  fwd[z[3]] = mi * (Y(1, 2) - Y(3, 4));
  inv[y[biv_index(1, 2)]] = half * v(z[2]) + ihalf * v(z[3]);
  inv[y[biv_index(1, 3)]] = half * (v(t) + v(x));
  inv[y[biv_index(1, 4)]] = half * v(z[0]) + ihalf * v(z[1]);
  inv[y[biv_index(2, 3)]] = half * v(z[0]) - ihalf * v(z[1]);
  inv[y[biv_index(2, 4)]] = half * (v(t) - v(x));
  inv[y[biv_index(3, 4)]] = half * v(z[2]) - ihalf * v(z[3]);
  // Sanity: the two maps are mutually inverse.
  for (const auto& [s, img] : fwd)
    if (img.substitute(inv) != v(s)) return CheckOutcome::fail("coordinate maps are not inverse");
  auto d = [&](std::uint32_t s) { return Derivation::partial(tab, s); };
  const Scalar I = Scalar::I();
  const std::array<Derivation, 6> expect = {d(z[2]) - I * d(z[3]), d(t) + d(x), d(z[0]) - I * d(z[1]),
                                            d(z[0]) + I * d(z[1]), d(t) - d(x), d(z[2]) + I * d(z[3])};
  for (unsigned n = 0; n < 6; ++n) {
    const auto got = change_coordinates(d(y[n]), fwd, inv);
    if (got != expect[n]) return CheckOutcome::fail("d_" + pair_name(n) + " = " + got.str());
  }
  return {};
}

CheckOutcome form_check(const Rational& factor, const Rational& t, const Rational& x, const KRational& z) {
  const auto y = P(Hermitian2::from_txz(DivAlg::H, t, x, z));
  const Scalar lhs = Scalar(factor) * bilinear_B(y, y);
  const Scalar rhs(-minkowski_norm(t, x, z));
  if (lhs != rhs)
    return CheckOutcome::fail(to_string(factor) + "B(Pv,Pv) = " + to_string(lhs) + " but -(t^2-x^2-|z|^2) = " +
                              to_string(rhs) + " at t=" + to_string(t) + ", x=" + to_string(x) + ", z=" +
                              to_string(z));
  return {};
}

C4 random_c4(Rng& rng) {
  C4 u;
  for (auto& c : u) c = Scalar(rng.rational(), rng.rational());
  return u;
}

}  // namespace sg
