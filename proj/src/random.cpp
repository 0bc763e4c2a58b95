#include "supergrass/random.hpp"

#include <algorithm>

namespace sg {

long Rng::uniform(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(g_);
}

Rational Rng::rational(long span, long den) {
  Rational q(uniform(-span, span), uniform(1, den));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(long span, long den) {
  for (;;) {
    Rational q = rational(span, den);
    if (sgn(q) != 0) return q;
  }
}

SuperPolynomial random_poly(Rng& rng, const TablePtr& table, const PolyShape& shape) {
  std::vector<std::uint32_t> even, odd;
  auto consider = [&](std::uint32_t s) {
    (table->at(s).is_even() ? even : odd).push_back(s);
  };
  if (shape.symbols.empty()) {
    for (std::uint32_t s = 0; s < table->size(); ++s) consider(s);
  } else {
    for (auto s : shape.symbols) consider(s);
  }
  SuperPolynomial out(table);
  const unsigned terms = static_cast<unsigned>(rng.uniform(1, std::max(1u, shape.max_terms)));
  for (unsigned n = 0; n < terms; ++n) {
    SuperPolynomial t = SuperPolynomial::constant(
        table, shape.gaussian ? Scalar(rng.nonzero_rational(), rng.rational()) : Scalar(rng.nonzero_rational()));
    if (!even.empty()) {
      const long deg = rng.uniform(0, shape.max_even_degree);
      for (long d = 0; d < deg; ++d)
        t = t * SuperPolynomial::variable(table, even[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(even.size()) - 1))]);
    }
    long nodd = odd.empty() ? 0 : rng.uniform(0, std::min<long>(shape.max_odd, static_cast<long>(odd.size())));
    if (shape.want == Want::Even && nodd % 2) nodd = nodd > 0 ? nodd - 1 : 0;
    if (shape.want == Want::Odd && nodd % 2 == 0) {
      if (odd.empty()) break;
      nodd = nodd + 1 <= static_cast<long>(odd.size()) ? nodd + 1 : nodd - 1;
    }
    std::vector<std::uint32_t> pool = odd;
    std::shuffle(pool.begin(), pool.end(), rng.engine());
    for (long i = 0; i < nodd; ++i) t = t * SuperPolynomial::variable(table, pool[static_cast<std::size_t>(i)]);
    out += t;
  }
  return out;
}

DAElement<Rational> random_element(Rng& rng, DivAlg a, long span) {
  DAElement<Rational> e(a);
  for (unsigned i = 0; i < e.size(); ++i) e[i] = rng.rational(span, 3);
  return e;
}

}  // namespace sg
