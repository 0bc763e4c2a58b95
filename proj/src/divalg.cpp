#include "supergrass/divalg.hpp"

#include "supergrass/superpoly.hpp"

namespace sg {

namespace {

// Sign/index tables, built once; reads are thread-safe.
struct Table {
  unsigned k;
  std::vector<std::vector<BasisProduct>> p;
};

Table build(unsigned k) {
  Table t{k, std::vector<std::vector<BasisProduct>>(k, std::vector<BasisProduct>(k, {0, 0}))};
  for (unsigned a = 0; a < k; ++a) {
    t.p[0][a] = {1, a};
    t.p[a][0] = {1, a};
  }
  for (unsigned a = 1; a < k; ++a) t.p[a][a] = {-1, 0};
  auto line = [&](unsigned p, unsigned q, unsigned r) {
    const unsigned c[3] = {p - 1, q - 1, r - 1};
    for (int s = 0; s < 3; ++s) {
      const unsigned x = c[s], y = c[(s + 1) % 3], z = c[(s + 2) % 3];
      t.p[x][y] = {1, z};
      t.p[y][x] = {-1, z};
    }
  };
  if (k == 4) line(2, 3, 4);
  if (k == 8)
    for (const auto& l : octonion_lines()) line(l[0], l[1], l[2]);
  return t;
}

const Table& table(DivAlg a) {
  static const Table r = build(1), c = build(2), h = build(4), o = build(8);
  switch (a) {
    case DivAlg::R: return r;
    case DivAlg::C: return c;
    case DivAlg::H: return h;
    case DivAlg::O: return o;
  }
  return r;
}

}  // namespace

unsigned dim(DivAlg a) {
  switch (a) {
    case DivAlg::R: return 1;
    case DivAlg::C: return 2;
    case DivAlg::H: return 4;
    case DivAlg::O: return 8;
  }
  return 1;
}

DivAlg divalg_from_dim(unsigned k) {
  switch (k) {
    case 1: return DivAlg::R;
    case 2: return DivAlg::C;
    case 4: return DivAlg::H;
    case 8: return DivAlg::O;
    default: throw PreconditionError("k must be 1, 2, 4 or 8, got " + std::to_string(k));
  }
}

std::string name(DivAlg a) {
  switch (a) {
    case DivAlg::R: return "R";
    case DivAlg::C: return "C";
    case DivAlg::H: return "H";
    case DivAlg::O: return "O";
  }
  return "?";
}

const std::vector<std::array<unsigned, 3>>& octonion_lines() {
  // Chosen so that u1u2 = u3u4 = u6u7 = u8u5 = u2 and the central charges of
  // the ten-to-four dimensional reduction take their documented form.
  static const std::vector<std::array<unsigned, 3>> lines = {
      {2, 3, 4}, {2, 6, 7}, {5, 2, 8}, {3, 6, 8}, {3, 5, 7}, {4, 5, 6}, {7, 4, 8}};
  return lines;
}

BasisProduct basis_product(DivAlg a, unsigned x, unsigned y) { return table(a).p.at(x).at(y); }

GammaConstants gamma_constants(DivAlg a) {
  const unsigned k = dim(a);
  GammaConstants g(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, Rational(0))));
  for (unsigned x = 0; x < k; ++x)
    for (unsigned y = 0; y < k; ++y) {
      // u_x conj(u_y) - u_y conj(u_x), conj(u_i) = -u_i for i > 0.
      const int cy = y == 0 ? 1 : -1;
      const int cx = x == 0 ? 1 : -1;
      const BasisProduct p = basis_product(a, x, y);
      const BasisProduct q = basis_product(a, y, x);
      g[x][y][p.index] += Rational(p.sign * cy, 2);
      g[x][y][q.index] -= Rational(q.sign * cx, 2);
    }
  return g;
}

std::string to_string(const DAElement<Rational>& a) {
  std::string out;
  for (unsigned i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    std::string t = (a[i] == 1 ? std::string() : a[i] == -1 ? std::string("-") : to_string(a[i]) + "*") +
                    "u" + std::to_string(i + 1);
    if (out.empty())
      out = t;
    else if (t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

bool clifford_complex_check() {
  SymbolTable st;
  st.add_clifford("eps", Rational(1));
  const TablePtr t = freeze(std::move(st));
  const SuperPolynomial basis[2] = {SuperPolynomial::constant(t, Scalar(1)),
                                    SuperPolynomial::variable(t, "eps")};
  for (unsigned x = 0; x < 2; ++x)
    for (unsigned y = 0; y < 2; ++y) {
      const BasisProduct p = basis_product(DivAlg::C, x, y);
      if (basis[x] * basis[y] != Scalar(p.sign) * basis[p.index]) return false;
    }
  return true;
}

}  // namespace sg
