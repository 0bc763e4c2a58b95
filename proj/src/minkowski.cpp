#include "supergrass/minkowski.hpp"

#include <sstream>

namespace sg {

namespace {

bool kzero(const KPoly& z) {
  for (const auto& c : z.coeffs())
    if (!c.is_zero()) return false;
  return true;
}

std::string kpoly_str(const KPoly& z) {
  std::string out;
  for (unsigned i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + z[i].str() + ")";
    if (i > 0) out += "*u" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

KRational kconst(DivAlg tag, const Rational& c) { return KRational::unit(tag, 0, c, Rational(0)); }
KRational kunit(DivAlg tag, unsigned alpha) { return KRational::unit(tag, alpha - 1, Rational(1), Rational(0)); }

bool only_even(const SuperPolynomial& p) { return p.grading() != Grading::Odd && p.grading() != Grading::Mixed; }
bool only_odd(const SuperPolynomial& p) { return p.grading() == Grading::Odd || p.is_zero(); }

std::string ab(unsigned a, unsigned b) { return std::to_string(a) + std::to_string(b); }

}  // namespace

KNumber to_number(const KRational& a) {
  return map_coeffs<Scalar>(a, [](const Rational& q) { return Scalar(q); }, Scalar(0));
}

MatrixRing MatrixRing::make(DivAlg tag, unsigned q) {
  SymbolTable st;
  MatrixRing r;
  r.tag = tag;
  r.eps = st.add_clifford("eps", Rational(1));
  for (unsigned i = 1; i <= q; ++i) r.eta.push_back(st.add_odd("et" + std::to_string(i)));
  r.table = freeze(std::move(st));
  return r;
}

KPoly MatrixRing::lift(const KNumber& z) const {
  KPoly out(tag, SuperPolynomial(table));
  for (unsigned i = 0; i < z.size(); ++i) out[i] = poly(z[i]);
  return out;
}

KPoly MatrixRing::unit(unsigned alpha) const {
  return KPoly::unit(tag, alpha - 1, poly(Scalar(1)), SuperPolynomial(table));
}

// NilMatrix5 ------------------------------------------------------------------

NilMatrix5::NilMatrix5(const MatrixRing& ring) : ring_(ring) {
  for (auto& row : e_)
    for (auto& x : row) x = KPoly(ring.tag, SuperPolynomial(ring.table));
}

NilMatrix5 NilMatrix5::identity(const MatrixRing& ring) {
  NilMatrix5 m(ring);
  for (unsigned i = 1; i <= 5; ++i) m(i, i) = ring.unit(1);
  return m;
}

bool NilMatrix5::is_zero() const {
  for (const auto& row : e_)
    for (const auto& x : row)
      if (!kzero(x)) return false;
  return true;
}

NilMatrix5 NilMatrix5::conj_i() const {
  NilMatrix5 r(*this);
  for (auto& row : r.e_)
    for (auto& x : row)
      for (unsigned i = 0; i < x.size(); ++i) x[i] = x[i].conj_i();
  return r;
}

std::string NilMatrix5::str() const {
  std::ostringstream os;
  bool any = false;
  for (unsigned i = 1; i <= 5; ++i)
    for (unsigned j = 1; j <= 5; ++j) {
      const auto& x = (*this)(i, j);
      if (kzero(x)) continue;
      os << (any ? "; " : "") << "(" << i << "," << j << "): " << kpoly_str(x);
      any = true;
    }
  return any ? os.str() : "0";
}

NilMatrix5 NilMatrix5::operator-() const {
  NilMatrix5 r(*this);
  for (auto& row : r.e_)
    for (auto& x : row) x = -x;
  return r;
}

NilMatrix5& NilMatrix5::operator+=(const NilMatrix5& o) {
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) e_[i][j] += o.e_[i][j];
  return *this;
}

NilMatrix5& NilMatrix5::operator-=(const NilMatrix5& o) {
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) e_[i][j] -= o.e_[i][j];
  return *this;
}

NilMatrix5 operator*(const NilMatrix5& a, const NilMatrix5& b) {
  NilMatrix5 r(a.ring_);
  std::array<std::array<bool, 5>, 5> za{}, zb{};
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) {
      za[i][j] = kzero(a.e_[i][j]);
      zb[i][j] = kzero(b.e_[i][j]);
    }
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned l = 0; l < 5; ++l) {
      if (za[i][l]) continue;
      for (unsigned j = 0; j < 5; ++j)
        if (!zb[l][j]) r.e_[i][j] += a.e_[i][l] * b.e_[l][j];
    }
  return r;
}

NilMatrix5 operator*(const SuperPolynomial& c, const NilMatrix5& m) {
  NilMatrix5 r(m);
  for (auto& row : r.e_)
    for (auto& x : row)
      if (!kzero(x)) x = c * x;
  return r;
}

NilMatrix5 operator*(const Scalar& c, const NilMatrix5& m) {
  return SuperPolynomial::constant(m.ring_.table, c) * m;
}

bool operator==(const NilMatrix5& a, const NilMatrix5& b) {
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j)
      if (!kzero(a.e_[i][j] - b.e_[i][j])) return false;
  return true;
}

namespace {

void require_translation_sector(const NilMatrix5& m) {
  auto allowed = [](unsigned i, unsigned j) {
    if ((i == 1 || i == 2) && j == 3) return true;
    if (i == 3 && (j == 4 || j == 5)) return true;
    return (i == 1 || i == 2) && (j == 4 || j == 5);
  };
  for (unsigned i = 1; i <= 5; ++i)
    for (unsigned j = 1; j <= 5; ++j)
      if (!allowed(i, j) && !kzero(m(i, j)))
        throw PreconditionError("matrix has an entry outside the translation sector at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
}

}  // namespace

NilMatrix5 anticomm(const NilMatrix5& m, const NilMatrix5& n) {
  require_translation_sector(m);
  require_translation_sector(n);
  return m * n + n * m;
}

NilMatrix5 commutator(const NilMatrix5& m, const NilMatrix5& n) { return m * n - n * m; }

NilMatrix5 q_matrix(const MatrixRing& r, unsigned a, const KNumber& lambda) {
  if (a < 1 || a > 2) throw PreconditionError("supercharge index must be 1 or 2");
  NilMatrix5 m(r);
  const auto e = r.var(r.eps);
  m(a, 3) = e * r.lift(lambda);
  m(3, 3 + a) = e * r.lift(lambda.conj());
  return m;
}

NilMatrix5 q_basis(const MatrixRing& r, unsigned a, unsigned alpha) {
  return q_matrix(r, a, to_number(kunit(r.tag, alpha)));
}

NilMatrix5 x_matrix(const MatrixRing& r, unsigned a, unsigned b) { return x_matrix(r, a, b, r.unit(1)); }

NilMatrix5 x_matrix(const MatrixRing& r, unsigned a, unsigned b, const KPoly& zeta) {
  NilMatrix5 m(r);
  m(a, 3 + b) = zeta;
  return m;
}

NilMatrix5 re_matrix(const MatrixRing& r, unsigned a, unsigned b) {
  return Scalar(Rational(1, 2)) * (x_matrix(r, a, b) + x_matrix(r, b, a));
}

NilMatrix5 im_matrix(const MatrixRing& r, unsigned gamma) {
  NilMatrix5 m(r);
  const auto half = r.poly(Scalar(Rational(1, 2)));
  m(1, 5) = half * r.unit(gamma);
  m(2, 4) = -(half * r.unit(gamma));
  return m;
}

NilMatrix5 re_of(const MatrixRing& r, unsigned a, unsigned b, const KPoly& zeta) {
  const KPoly c = r.poly(Scalar(Rational(1, 4))) * (zeta + zeta.conj());
  return x_matrix(r, a, b, c) + x_matrix(r, b, a, c);
}

NilMatrix5 im_of(const MatrixRing& r, unsigned a, unsigned b, const KPoly& zeta) {
  const KPoly c = r.poly(Scalar(Rational(1, 4))) * (zeta - zeta.conj());
  return x_matrix(r, a, b, c) - x_matrix(r, b, a, c);
}

int eps2(unsigned a, unsigned b) {
  if (a == b) return 0;
  return a < b ? 1 : -1;
}

CheckOutcome supercharge_bracket_check(DivAlg tag, unsigned samples, std::uint64_t seed) {
  const auto r = MatrixRing::make(tag);
  const unsigned k = r.k();
  const auto G = gamma_constants(tag);
  const Scalar m2(-2);
  auto direct = [&](unsigned a, unsigned b, const KNumber& l, const KNumber& mu) {
    return -(x_matrix(r, a, b, r.lift(l * mu.conj())) + x_matrix(r, b, a, r.lift(mu * l.conj())));
  };
  auto split = [&](unsigned a, unsigned b, const KNumber& l, const KNumber& mu) {
    const KPoly z = r.lift(l * mu.conj());
    return m2 * (re_of(r, a, b, z) + im_of(r, a, b, z));
  };
  auto pair_check = [&](unsigned a, unsigned b, const KNumber& l, const KNumber& mu,
                        const std::string& what) -> CheckOutcome {
    const auto br = anticomm(q_matrix(r, a, l), q_matrix(r, b, mu));
    if (br != direct(a, b, l, mu)) return CheckOutcome::fail(what + ": direct form, got " + br.str());
    if (br != split(a, b, l, mu)) return CheckOutcome::fail(what + ": real/imaginary split, got " + br.str());
    return {};
  };
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b)
      for (unsigned al = 1; al <= k; ++al)
        for (unsigned be = 1; be <= k; ++be) {
          const std::string what = "[Q_" + std::to_string(a) + "^" + std::to_string(al) + ", Q_" +
                                   std::to_string(b) + "^" + std::to_string(be) + "]";
          const auto ua = to_number(kunit(tag, al)), ub = to_number(kunit(tag, be));
          if (auto c = pair_check(a, b, ua, ub, what); !c.ok) return c;
          NilMatrix5 ter = al == be ? re_matrix(r, a, b) : NilMatrix5(r);
          const int e = eps2(a, b);
          for (unsigned g = 2; g <= k && e != 0; ++g)
            if (sgn(G[al - 1][be - 1][g - 1]) != 0) ter += Scalar(Rational(G[al - 1][be - 1][g - 1] * e)) * im_matrix(r, g);
          const auto br = anticomm(q_basis(r, a, al), q_basis(r, b, be));
          if (br != m2 * ter) return CheckOutcome::fail(what + ": structure-constant form, got " + br.str());
        }
  Rng rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const auto l = to_number(random_element(rng, tag)), mu = to_number(random_element(rng, tag));
    for (unsigned a = 1; a <= 2; ++a)
      for (unsigned b = 1; b <= 2; ++b)
        if (auto c = pair_check(a, b, l, mu, "random pair " + std::to_string(s)); !c.ok) return c;
  }
  return {};
}

CheckOutcome centrality_check(DivAlg tag) {
  const auto r = MatrixRing::make(tag);
  const unsigned k = r.k();
  std::vector<std::pair<std::string, NilMatrix5>> even, all;
  even.emplace_back("R_(11)", re_matrix(r, 1, 1));
  even.emplace_back("R_(12)", re_matrix(r, 1, 2));
  even.emplace_back("R_(22)", re_matrix(r, 2, 2));
  for (unsigned g = 2; g <= k; ++g) even.emplace_back("I_" + std::to_string(g), im_matrix(r, g));
  all = even;
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned al = 1; al <= k; ++al)
      all.emplace_back("Q_" + std::to_string(a) + "^" + std::to_string(al), q_basis(r, a, al));
  for (const auto& [n1, m1] : even)
    for (const auto& [n2, m2] : all)
      if (!commutator(m1, m2).is_zero()) return CheckOutcome::fail(n1 + " does not commute with " + n2);
  std::vector<std::pair<std::string, NilMatrix5>> pairs;
  for (const auto& [n1, m1] : all)
    for (const auto& [n2, m2] : all) {
      auto p = m1 * m2;
      if (!p.is_zero()) pairs.emplace_back(n1 + n2, std::move(p));
    }
  for (const auto& [n1, p] : pairs)
    for (const auto& [n3, m3] : all)
      if (!(p * m3).is_zero()) return CheckOutcome::fail("triple product " + n1 + n3 + " is nonzero");
  return {};
}

std::vector<BracketEntry> bracket_table(DivAlg tag) {
  const auto r = MatrixRing::make(tag);
  const unsigned k = r.k();
  auto entry = [](const KPoly& e, unsigned alpha) {
    const auto& p = e[alpha - 1];
    if (!p.is_constant() || !p.constant_term().is_real()) throw Error("bracket entry is not a rational constant");
    return p.constant_term().re();
  };
  std::vector<BracketEntry> out;
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned al = 1; al <= k; ++al)
      for (unsigned b = 1; b <= 2; ++b)
        for (unsigned be = 1; be <= k; ++be) {
          const auto m = anticomm(q_basis(r, a, al), q_basis(r, b, be));
          BracketEntry e{a, al, b, be, {}};
          NilMatrix5 rebuilt(r);
          auto put = [&](const std::string& label, const Rational& c, const NilMatrix5& g) {
            if (sgn(c) == 0) return;
            e.coeffs[label] = c;
            rebuilt += Scalar(c) * g;
          };
          put("R11", entry(m(1, 4), 1), re_matrix(r, 1, 1));
          put("R22", entry(m(2, 5), 1), re_matrix(r, 2, 2));
          put("R12", 2 * entry(m(1, 5), 1), re_matrix(r, 1, 2));
          for (unsigned g = 2; g <= k; ++g) put("I" + std::to_string(g), 2 * entry(m(1, 5), g), im_matrix(r, g));
          if (rebuilt != m) throw Error("bracket does not decompose over R and I generators: " + m.str());
          out.push_back(std::move(e));
        }
  return out;
}

NilMatrix5 super_exp(const NilMatrix5& v, const NilMatrix5& th) {
  return NilMatrix5::identity(v.ring()) + v + th + Scalar(Rational(1, 2)) * (th * th);
}

NilMatrix5 even_translation(const MatrixRing& r, const SuperPolynomial& v11, const SuperPolynomial& v12,
                            const SuperPolynomial& v22, const std::vector<SuperPolynomial>& vim) {
  if (vim.size() + 1 != r.k()) throw PreconditionError("need k - 1 imaginary coordinates");
  for (const auto* p : {&v11, &v12, &v22})
    if (!only_even(*p)) throw ParityError("even translation coordinate is not even: " + p->str());
  NilMatrix5 v = v11 * re_matrix(r, 1, 1) + v12 * re_matrix(r, 1, 2) + v22 * re_matrix(r, 2, 2);
  for (unsigned g = 2; g <= r.k(); ++g) {
    if (!only_even(vim[g - 2])) throw ParityError("even translation coordinate is not even: " + vim[g - 2].str());
    v += vim[g - 2] * im_matrix(r, g);
  }
  return v;
}

NilMatrix5 odd_translation(const MatrixRing& r, const std::vector<std::vector<SuperPolynomial>>& th) {
  if (th.size() != 2) throw PreconditionError("need two rows of odd coordinates");
  NilMatrix5 m(r);
  for (unsigned a = 1; a <= 2; ++a) {
    if (th[a - 1].size() != r.k()) throw PreconditionError("need k odd coordinates per row");
    for (unsigned al = 1; al <= r.k(); ++al) {
      const auto& c = th[a - 1][al - 1];
      if (!only_odd(c)) throw ParityError("odd translation coordinate is not odd: " + c.str());
      m += c * q_basis(r, a, al);
    }
  }
  return m;
}

TranslationPoint random_translation(Rng& rng, const MatrixRing& r) {
  PolyShape ev;
  ev.symbols = r.eta;
  ev.want = Want::Even;
  ev.max_terms = 3;
  PolyShape od = ev;
  od.want = Want::Odd;
  std::vector<SuperPolynomial> vim;
  for (unsigned g = 2; g <= r.k(); ++g) vim.push_back(random_poly(rng, r.table, ev));
  TranslationPoint p;
  p.v = even_translation(r, random_poly(rng, r.table, ev), random_poly(rng, r.table, ev),
                         random_poly(rng, r.table, ev), vim);
  std::vector<std::vector<SuperPolynomial>> th(2);
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned al = 0; al < r.k(); ++al) th[a].push_back(random_poly(rng, r.table, od));
  p.theta = odd_translation(r, th);
  return p;
}

CheckOutcome group_law_check(DivAlg tag, unsigned samples, std::uint64_t seed) {
  const auto r = MatrixRing::make(tag, 4);
  Rng rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const auto p = random_translation(rng, r), q = random_translation(rng, r);
    const auto lhs = super_exp(p.v, p.theta) * super_exp(q.v, q.theta);
    const auto mid = Scalar(Rational(1, 2)) * commutator(p.theta, q.theta);
    const auto rhs = super_exp(p.v + q.v + mid, p.theta + q.theta);
    if (lhs != rhs) return CheckOutcome::fail("sample " + std::to_string(s) + ": difference " + (lhs - rhs).str());
  }
  return {};
}

// Hermitian blocks --------------------------------------------------------------

Hermitian2 Hermitian2::from_txz(DivAlg tag, const Rational& t, const Rational& x, const KRational& z) {
  Hermitian2 h;
  h.tag = tag;
  h.a = (t + x) / 2;
  h.d = (t - x) / 2;
  h.z = Rational(1, 2) * z;
  return h;
}

Rational minkowski_norm(const Rational& t, const Rational& x, const KRational& z) {
  return t * t - x * x - norm_sq(z);
}

namespace {

Rational real_part(const SuperPolynomial& p) {
  if (!p.is_constant()) throw PreconditionError("expected a constant entry, got " + p.str());
  const Scalar c = p.constant_term();
  if (!c.is_real()) throw PreconditionError("expected a real entry, got " + p.str());
  return c.re();
}

KRational rational_entry(const KPoly& z) {
  KRational out(z.tag(), Rational(0));
  for (unsigned i = 0; i < z.size(); ++i) out[i] = real_part(z[i]);
  return out;
}

}  // namespace

Hermitian2 null_vector(DivAlg tag, const KRational& l1, const KRational& l2) {
  const auto r = MatrixRing::make(tag);
  const auto Q = q_matrix(r, 1, to_number(l1)) + q_matrix(r, 2, to_number(l2));
  const auto C = anticomm(Q, Q);
  Hermitian2 h;
  h.tag = tag;
  h.a = rational_entry(C(1, 4))[0] / -2;
  h.d = rational_entry(C(2, 5))[0] / -2;
  h.z = Rational(-1, 2) * rational_entry(C(1, 5));
  return h;
}

CheckOutcome null_vector_check(DivAlg tag, const KRational& l1, const KRational& l2) {
  const auto r = MatrixRing::make(tag);
  const auto Q = q_matrix(r, 1, to_number(l1)) + q_matrix(r, 2, to_number(l2));
  const auto C = anticomm(Q, Q);
  const auto h = null_vector(tag, l1, l2);
  NilMatrix5 X(r);
  X(1, 4) = r.lift(to_number(kconst(tag, h.a)));
  X(2, 5) = r.lift(to_number(kconst(tag, h.d)));
  X(1, 5) = r.lift(to_number(h.z));
  X(2, 4) = r.lift(to_number(h.z.conj()));
  if (C != Scalar(-2) * X) return CheckOutcome::fail("[Q, Q] is not -2 X: " + C.str());
  if (h.a != norm_sq(l1) || h.d != norm_sq(l2) || h.z != l1 * l2.conj())
    return CheckOutcome::fail("X differs from [[|l1|^2, l1 conj l2], [l2 conj l1, |l2|^2]]");
  if (sgn(h.det()) != 0) return CheckOutcome::fail("det X = " + to_string(h.det()));
  if (sgn(h.t()) < 0) return CheckOutcome::fail("trace X < 0");
  return {};
}

CheckOutcome r_symmetry_check(DivAlg tag, const KRational& q, unsigned samples, std::uint64_t seed) {
  if (tag != DivAlg::C && tag != DivAlg::H) throw UnsupportedError("R-symmetry check covers C and H only");
  const Rational n = norm_sq(q);
  if (sgn(n) == 0) throw PreconditionError("q must be nonzero");
  const KRational alpha = (Rational(1) / n) * (q * q);
  if (norm_sq(alpha) != 1) return CheckOutcome::fail("|alpha| != 1");
  const auto r = MatrixRing::make(tag);
  Rng rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const auto l = random_element(rng, tag), mu = random_element(rng, tag);
    for (unsigned a = 1; a <= 2; ++a)
      for (unsigned b = 1; b <= 2; ++b) {
        const auto before = anticomm(q_matrix(r, a, to_number(l)), q_matrix(r, b, to_number(mu)));
        const auto after =
            anticomm(q_matrix(r, a, to_number(l * alpha)), q_matrix(r, b, to_number(mu * alpha)));
        if (before != after)
          return CheckOutcome::fail("sample " + std::to_string(s) + " (a,b)=(" + ab(a, b) + ") changes");
      }
  }
  return {};
}

// Lorentz sector ----------------------------------------------------------------

KMat2 kmat2(DivAlg tag, const KRational& p, const KRational& q, const KRational& r, const KRational& s) {
  for (const auto* e : {&p, &q, &r, &s})
    if (e->tag() != tag) throw PreconditionError("entry tag mismatch");
  return {{{p, q}, {r, s}}};
}

KMat2 mul(const KMat2& a, const KMat2& b) {
  KMat2 r;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

KMat2 dagger(const KMat2& m) {
  KMat2 r;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) r[i][j] = m[j][i].conj();
  return r;
}

KMat2 hermitian_basis(DivAlg tag, unsigned index) {
  const unsigned k = dim(tag);
  if (index > k + 1) throw PreconditionError("Hermitian basis index out of range");
  const KRational z = kconst(tag, 0), one = kconst(tag, 1);
  switch (index) {
    case 0: return kmat2(tag, one, z, z, one);
    case 1: return kmat2(tag, one, z, z, -one);
    case 2: return kmat2(tag, z, one, one, z);
    default: {
      const auto u = kunit(tag, index - 1);
      return kmat2(tag, z, u, -u, z);
    }
  }
}

std::vector<Rational> hermitian_coords(const KMat2& m) {
  const auto& a = m[0][0];
  const auto& d = m[1][1];
  if (a.im() != kconst(a.tag(), 0) || d.im() != kconst(a.tag(), 0) || m[1][0] != m[0][1].conj())
    throw PreconditionError("matrix is not Hermitian");
  std::vector<Rational> c = {(a[0] + d[0]) / 2, (a[0] - d[0]) / 2};
  for (unsigned i = 0; i < m[0][1].size(); ++i) c.push_back(m[0][1][i]);
  return c;
}

RatMatrix rho(const KMat2& sigma) {
  if (sgn(sigma[0][0][0] + sigma[1][1][0]) != 0) throw PreconditionError("Re tr sigma must vanish");
  const DivAlg tag = sigma[0][0].tag();
  const unsigned n = dim(tag) + 2;
  RatMatrix out(n, std::vector<Rational>(n));
  const KMat2 sd = dagger(sigma);
  for (unsigned c = 0; c < n; ++c) {
    const KMat2 e = hermitian_basis(tag, c);
    KMat2 s = mul(sigma, e);
    const KMat2 t = mul(e, sd);
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j) s[i][j] = Rational(1, 2) * (s[i][j] + t[i][j]);
    const auto col = hermitian_coords(s);
    for (unsigned i = 0; i < n; ++i) out[i][c] = col[i];
  }
  return out;
}

RatMatrix boost(unsigned k, unsigned j) {
  RatMatrix m(k + 2, std::vector<Rational>(k + 2));
  m[1 + j][0] = 1;
  m[0][1 + j] = 1;
  return m;
}

RatMatrix rotation(unsigned k, unsigned i, unsigned j) {
  RatMatrix m(k + 2, std::vector<Rational>(k + 2));
  m[1 + j][1 + i] = 1;
  m[1 + i][1 + j] = -1;
  return m;
}

std::vector<LorentzRow> lorentz_table(DivAlg tag) {
  const unsigned k = dim(tag);
  const KRational z = kconst(tag, 0), one = kconst(tag, 1);
  std::vector<LorentzRow> rows;
  rows.push_back({"B_0", kmat2(tag, one, z, z, -one), boost(k, 0)});
  rows.push_back({"B_1", kmat2(tag, z, one, one, z), boost(k, 1)});
  for (unsigned j = 2; j <= k; ++j) {
    const auto u = kunit(tag, j);
    rows.push_back({"B_" + std::to_string(j), kmat2(tag, z, u, -u, z), boost(k, j)});
  }
  rows.push_back({"A_01", kmat2(tag, z, -one, one, z), rotation(k, 0, 1)});
  for (unsigned j = 2; j <= k; ++j) {
    const auto u = kunit(tag, j);
    rows.push_back({"A_0" + std::to_string(j), kmat2(tag, z, -u, -u, z), rotation(k, 0, j)});
  }
  for (unsigned j = 2; j <= k; ++j) {
    const auto u = kunit(tag, j);
    rows.push_back({"A_1" + std::to_string(j), kmat2(tag, u, z, z, -u), rotation(k, 1, j)});
  }
  return rows;
}

CheckOutcome lorentz_table_check(DivAlg tag) {
  for (const auto& row : lorentz_table(tag))
    if (rho(row.sigma) != row.expected) return CheckOutcome::fail(row.label + ": rho(sigma) differs");
  return {};
}

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  RatMatrix r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) r[i][j] += a[i][l] * b[l][j] - b[i][l] * a[l][j];
  return r;
}

CheckOutcome rotation_from_boosts_check(unsigned k) {
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = i + 1; j <= k; ++j) {
      auto c = mat_commutator(boost(k, i), boost(k, j));
      for (auto& row : c)
        for (auto& x : row) x = -x;
      if (c != rotation(k, i, j))
        return CheckOutcome::fail("A_" + std::to_string(i) + std::to_string(j) + " != -[B_i, B_j]");
    }
  return {};
}

namespace {

/// Incremental row echelon form over Q.
class RowSpace {
 public:
  bool add(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * rows_[r][i];
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        const Rational f = v[i];
        for (auto& x : v) x /= f;
        pivots_.push_back(i);
        rows_.push_back(std::move(v));
        return true;
      }
    return false;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> flatten(const RatMatrix& m) {
  std::vector<Rational> v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

}  // namespace

std::vector<RatMatrix> lorentz_closure_basis(DivAlg tag) {
  const unsigned k = dim(tag);
  const KRational z = kconst(tag, 0);
  RowSpace space;
  std::vector<RatMatrix> basis;
  auto offer = [&](const RatMatrix& m) {
    if (space.add(flatten(m))) basis.push_back(m);
  };
  for (unsigned al = 1; al <= k; ++al) {
    const auto u = kunit(tag, al);
    offer(rho(kmat2(tag, u, z, z, -u)));
    offer(rho(kmat2(tag, z, u, z, z)));
    offer(rho(kmat2(tag, z, z, u, z)));
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) offer(mat_commutator(basis[i], basis[j]));
  return basis;
}

unsigned lorentz_closure_dim(DivAlg tag) { return static_cast<unsigned>(lorentz_closure_basis(tag).size()); }

Hermitian2 lorentz_conjugate(const KMat2& g, const Hermitian2& h) {
  if (h.tag != DivAlg::R && h.tag != DivAlg::C) throw UnsupportedError("Lorentz conjugation needs K = R or C");
  const KMat2 m = kmat2(h.tag, kconst(h.tag, h.a), h.z, h.z.conj(), kconst(h.tag, h.d));
  const KMat2 out = mul(mul(g, m), dagger(g));
  Hermitian2 r;
  r.tag = h.tag;
  r.a = out[0][0][0];
  r.d = out[1][1][0];
  r.z = out[0][1];
  return r;
}

CheckOutcome lorentz_conjugation_check(DivAlg tag, unsigned samples, std::uint64_t seed) {
  Rng rng(seed);
  const KRational zero = kconst(tag, 0), one = kconst(tag, 1);
  for (unsigned s = 0; s < samples; ++s) {
    const auto b = random_element(rng, tag), c = random_element(rng, tag);
    KRational w = random_element(rng, tag);
    while (sgn(norm_sq(w)) == 0) w = random_element(rng, tag);
    const KRational winv = (Rational(1) / norm_sq(w)) * w.conj();
    KMat2 g = mul(kmat2(tag, one, b, zero, one), kmat2(tag, one, zero, c, one));
    g = mul(g, kmat2(tag, w, zero, zero, winv));
    const auto h = Hermitian2::from_txz(tag, rng.rational(), rng.rational(), random_element(rng, tag));
    const auto h2 = lorentz_conjugate(g, h);
    if (h2.det() != h.det())
      return CheckOutcome::fail("sample " + std::to_string(s) + ": det " + to_string(h.det()) + " -> " +
                                to_string(h2.det()));
  }
  return {};
}

// Invariant vector fields -------------------------------------------------------

SuperMinkowski SuperMinkowski::make(DivAlg tag, const std::vector<std::string>& extra_even) {
  SuperMinkowski m;
  m.tag = tag;
  const unsigned k = dim(tag);
  SymbolTable st;
  m.v11 = st.add_even("v11");
  m.v12 = st.add_even("v12");
  m.v22 = st.add_even("v22");
  for (unsigned g = 2; g <= k; ++g) m.vim.push_back(st.add_even("v" + std::to_string(g)));
  for (const auto& n : extra_even) m.extra.push_back(st.add_even(n));
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned al = 1; al <= k; ++al) m.theta[a - 1].push_back(st.add_odd("th" + ab(a, al)));
  m.table = freeze(std::move(st));
  return m;
}

Derivation SuperMinkowski::d_sym(unsigned a, unsigned b) const {
  if (a == 1 && b == 1) return Derivation::partial(table, v11);
  if (a == 2 && b == 2) return Derivation::partial(table, v22);
  return Derivation::partial(table, v12);
}

Derivation SuperMinkowski::d_im(unsigned alpha, unsigned beta) const {
  static thread_local std::map<DivAlg, GammaConstants> cache;
  auto it = cache.find(tag);
  if (it == cache.end()) it = cache.emplace(tag, gamma_constants(tag)).first;
  const auto& G = it->second;
  Derivation d(table, Parity::Even);
  if (sgn(G[alpha - 1][beta - 1][0]) != 0) throw Error("structure constant has a real part");
  for (unsigned g = 2; g <= k(); ++g)
    if (sgn(G[alpha - 1][beta - 1][g - 1]) != 0)
      d += Scalar(G[alpha - 1][beta - 1][g - 1]) * Derivation::partial(table, vim[g - 2]);
  return d;
}

namespace {

Derivation invariant_field(const SuperMinkowski& m, unsigned a, unsigned alpha, int sign) {
  Derivation d = Derivation::partial(m.table, m.theta[a - 1][alpha - 1]);
  for (unsigned b = 1; b <= 2; ++b)
    for (unsigned be = 1; be <= m.k(); ++be) {
      Derivation inner = m.d_im(alpha, be);
      inner = Scalar(eps2(a, b)) * inner;
      if (alpha == be) inner += m.d_sym(a, b);
      const auto th = SuperPolynomial::variable(m.table, m.theta[b - 1][be - 1]);
      d += (Scalar(sign) * th) * inner;
    }
  return d;
}

}  // namespace

Derivation SuperMinkowski::D(unsigned a, unsigned alpha) const { return invariant_field(*this, a, alpha, -1); }
Derivation SuperMinkowski::tau(unsigned a, unsigned alpha) const { return invariant_field(*this, a, alpha, 1); }

CheckOutcome invariant_fields_check(DivAlg tag) {
  const auto m = SuperMinkowski::make(tag);
  const unsigned k = m.k();
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned al = 1; al <= k; ++al)
      for (unsigned b = 1; b <= 2; ++b)
        for (unsigned be = 1; be <= k; ++be) {
          const std::string what = "(" + ab(a, al) + "," + ab(b, be) + ")";
          Derivation rhs = Scalar(eps2(a, b)) * m.d_im(al, be);
          if (al == be) rhs += m.d_sym(a, b);
          if (!super_bracket(m.tau(a, al), m.D(b, be)).images().empty())
            return CheckOutcome::fail("[tau, D] != 0 at " + what);
          if (super_bracket(m.tau(a, al), m.tau(b, be)) != Scalar(2) * rhs)
            return CheckOutcome::fail("[tau, tau] at " + what);
          if (super_bracket(m.D(a, al), m.D(b, be)) != Scalar(-2) * rhs)
            return CheckOutcome::fail("[D, D] at " + what + ": " + super_bracket(m.D(a, al), m.D(b, be)).str());
        }
  return {};
}

Derivation change_coordinates(const Derivation& x, const std::map<std::uint32_t, SuperPolynomial>& forward,
                              const std::map<std::uint32_t, SuperPolynomial>& inverse) {
  Derivation out(x.table(), x.parity(), x.label());
  for (const auto& [n, f] : forward) out.set_image(n, x(f).substitute(inverse));
  for (const auto& [s, img] : x.images())
    if (!forward.count(s) && !inverse.count(s)) out.set_image(s, img.substitute(inverse));
  return out;
}

namespace {

struct Dictionary {
  std::map<std::uint32_t, SuperPolynomial> forward, inverse;
};

/// t = v11 + v22, x = v11 - v22, then the listed (new, old) identifications.
Dictionary light_cone(const SuperMinkowski& m, std::uint32_t t, std::uint32_t x,
                      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& same) {
  auto v = [&](std::uint32_t s) { return SuperPolynomial::variable(m.table, s); };
  Dictionary d;
  d.forward[t] = v(m.v11) + v(m.v22);
  d.forward[x] = v(m.v11) - v(m.v22);
  d.inverse[m.v11] = Scalar(Rational(1, 2)) * (v(t) + v(x));
  d.inverse[m.v22] = Scalar(Rational(1, 2)) * (v(t) - v(x));
  for (const auto& [n, o] : same) {
    d.forward[n] = v(o);
    d.inverse[o] = v(n);
  }
  return d;
}

}  // namespace

CheckOutcome real_dictionary_check() {
  const auto m = SuperMinkowski::make(DivAlg::R, {"t", "x", "y"});
  const auto t = m.extra[0], x = m.extra[1], y = m.extra[2];
  const auto dict = light_cone(m, t, x, {{y, m.v12}});
  auto push = [&](const Derivation& d) { return change_coordinates(d, dict.forward, dict.inverse); };
  const auto P = [&](std::uint32_t s) { return Derivation::partial(m.table, s); };
  const auto th1 = SuperPolynomial::variable(m.table, m.theta[0][0]);
  const auto th2 = SuperPolynomial::variable(m.table, m.theta[1][0]);
  const Derivation dpp = P(t) + P(x), dmm = P(t) - P(x);
  const Derivation tau1 = P(m.theta[0][0]) + th1 * dpp + th2 * P(y);
  const Derivation tau2 = P(m.theta[1][0]) + th1 * P(y) + th2 * dmm;
  const Derivation t1 = push(m.tau(1, 1)), t2 = push(m.tau(2, 1));
  if (t1 != tau1) return CheckOutcome::fail("tau_1 = " + t1.str());
  if (t2 != tau2) return CheckOutcome::fail("tau_2 = " + t2.str());
  if (super_bracket(t1, t2) != Scalar(2) * P(y)) return CheckOutcome::fail("[tau_1, tau_2] != 2 d/dy");
  if (super_bracket(t1, t1) != Scalar(2) * dpp) return CheckOutcome::fail("[tau_1, tau_1]");
  if (super_bracket(t2, t2) != Scalar(2) * dmm) return CheckOutcome::fail("[tau_2, tau_2]");
  const Derivation dab[2][2] = {{dpp, P(y)}, {P(y), dmm}};
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b)
      if (super_bracket(push(m.D(a, 1)), push(m.D(b, 1))) != Scalar(-2) * dab[a - 1][b - 1])
        return CheckOutcome::fail("[D_" + std::to_string(a) + ", D_" + std::to_string(b) + "]");
  return {};
}

NilMatrix5 x_dotted(const MatrixRing& r, unsigned a, unsigned b) {
  if (r.k() < 2) throw PreconditionError("dotted X needs a complex unit");
  const KPoly iu2 = r.poly(Scalar(Rational(0), Rational(-1, 2))) * r.unit(2);
  return Scalar(Rational(1, 2)) * (x_matrix(r, a, b) + x_matrix(r, b, a)) + x_matrix(r, a, b, iu2) -
         x_matrix(r, b, a, iu2);
}

CheckOutcome chiral_check() {
  const auto r = MatrixRing::make(DivAlg::C);
  const Scalar I = Scalar::I();
  auto Q = [&](unsigned a) { return q_basis(r, a, 1) - I * q_basis(r, a, 2); };
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b) {
      const std::string what = "(" + ab(a, b) + ")";
      if (!anticomm(Q(a), Q(b)).is_zero()) return CheckOutcome::fail("[Q, Q] != 0 at " + what);
      if (!anticomm(Q(a).conj_i(), Q(b).conj_i()).is_zero()) return CheckOutcome::fail("[Qbar, Qbar] != 0 at " + what);
      const auto br = anticomm(Q(a), Q(b).conj_i());
      if (br != Scalar(-4) * x_dotted(r, a, b)) return CheckOutcome::fail("[Q, Qbar] at " + what + ": " + br.str());
    }
  const auto m = SuperMinkowski::make(DivAlg::C, {"t", "x", "z1", "z2"});
  const auto t = m.extra[0], x = m.extra[1], z1 = m.extra[2], z2 = m.extra[3];
  auto D = [&](unsigned a) { return m.D(a, 1) - I * m.D(a, 2); };
  auto Db = [&](unsigned a) { return m.D(a, 1) + I * m.D(a, 2); };
  const auto dict = light_cone(m, t, x, {{z1, m.v12}, {z2, m.vim[0]}});
  const auto P = [&](std::uint32_t s) { return Derivation::partial(m.table, s); };
  const Derivation expect[2][2] = {{P(t) + P(x), P(z1) - I * P(z2)}, {P(z1) + I * P(z2), P(t) - P(x)}};
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b) {
      const std::string what = "(" + ab(a, b) + ")";
      if (!super_bracket(D(a), D(b)).images().empty()) return CheckOutcome::fail("[D, D] != 0 at " + what);
      if (!super_bracket(Db(a), Db(b)).images().empty()) return CheckOutcome::fail("[Dbar, Dbar] != 0 at " + what);
      const Derivation dab = m.d_sym(a, b) - (I * Scalar(eps2(a, b))) * P(m.vim[0]);
      if (super_bracket(D(a), Db(b)) != Scalar(-4) * dab) return CheckOutcome::fail("[D, Dbar] at " + what);
      const auto pushed = change_coordinates(dab, dict.forward, dict.inverse);
      if (pushed != expect[a - 1][b - 1]) return CheckOutcome::fail("dictionary at " + what + ": " + pushed.str());
    }
  return {};
}

// Reductions --------------------------------------------------------------------

std::vector<ReductionPair> reduction_pairs(DivAlg tag) {
  switch (tag) {
    case DivAlg::H: return {{1, 2}, {3, 4}};
    case DivAlg::O: return {{1, 2}, {3, 4}, {6, 7}, {8, 5}};
    default: throw UnsupportedError("reductions are defined for H and O");
  }
}

NilMatrix5 reduced_q(const MatrixRing& r, unsigned a, unsigned A) {
  const auto p = reduction_pairs(r.tag).at(A - 1);
  return q_basis(r, a, p.alpha) - Scalar::I() * q_basis(r, a, p.beta);
}

NilMatrix5 reduced_qbar(const MatrixRing& r, unsigned a, unsigned A) { return reduced_q(r, a, A).conj_i(); }

NilMatrix5 central_charge(const MatrixRing& r, unsigned A, unsigned B) {
  const unsigned N = static_cast<unsigned>(reduction_pairs(r.tag).size());
  if (A < 1 || B < 1 || A > N || B > N) throw PreconditionError("central charge index out of range");
  if (A == B) return NilMatrix5(r);
  if (A > B) return -central_charge(r, B, A);
  // zeta = s1 u_p + i s2 u_q
  struct Entry {
    int s1;
    unsigned p;
    int s2;
    unsigned q;
  };
  Entry e{};
  if (r.tag == DivAlg::H) {
    e = {-1, 3, 1, 4};
  } else {
    static const std::map<std::pair<unsigned, unsigned>, Entry> table = {
        {{1, 2}, {-1, 3, 1, 4}}, {{1, 3}, {-1, 6, 1, 7}}, {{1, 4}, {-1, 8, 1, 5}},
        {{2, 3}, {-1, 8, -1, 5}}, {{2, 4}, {1, 6, 1, 7}},  {{3, 4}, {-1, 3, -1, 4}}};
    e = table.at({A, B});
  }
  const KPoly zeta = r.poly(Scalar(e.s1)) * r.unit(e.p) + r.poly(Scalar(Rational(0), Rational(e.s2))) * r.unit(e.q);
  return im_of(r, 1, 2, zeta);
}

CheckOutcome reduction_check(DivAlg tag) {
  const auto r = MatrixRing::make(tag);
  const unsigned N = static_cast<unsigned>(reduction_pairs(tag).size());
  const Scalar m4(-4);
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b)
      for (unsigned A = 1; A <= N; ++A)
        for (unsigned B = 1; B <= N; ++B) {
          const std::string what = "(a,b,A,B)=(" + ab(a, b) + ab(A, B) + ")";
          const NilMatrix5 zero(r);
          const auto x1 = A == B ? x_dotted(r, a, b) : zero;
          const auto x2 = A == B ? x_dotted(r, b, a) : zero;
          const auto Z = Scalar(eps2(a, b)) * central_charge(r, A, B);
          if (anticomm(reduced_q(r, a, A), reduced_qbar(r, b, B)) != m4 * x1)
            return CheckOutcome::fail("[Q, Qbar] at " + what);
          if (anticomm(reduced_qbar(r, a, A), reduced_q(r, b, B)) != m4 * x2)
            return CheckOutcome::fail("[Qbar, Q] at " + what);
          const auto qq = anticomm(reduced_q(r, a, A), reduced_q(r, b, B));
          if (qq != m4 * Z) return CheckOutcome::fail("[Q, Q] at " + what + ": " + qq.str());
          if (anticomm(reduced_qbar(r, a, A), reduced_qbar(r, b, B)) != m4 * Z.conj_i())
            return CheckOutcome::fail("[Qbar, Qbar] at " + what);
        }
  if (tag == DivAlg::O) {
    const std::array<std::array<unsigned, 4>, 3> dual = {{{1, 2, 3, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}}};
    for (const auto& d : dual)
      if (central_charge(r, d[2], d[3]) != central_charge(r, d[0], d[1]).conj_i())
        return CheckOutcome::fail("Z_" + ab(d[2], d[3]) + " != conj Z_" + ab(d[0], d[1]));
  }
  return {};
}

}  // namespace sg
