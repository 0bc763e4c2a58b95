// Seeded generators for property checks.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "supergrass/derivation.hpp"
#include "supergrass/divalg.hpp"

namespace sg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with |p| <= span, 1 <= q <= den.
  Rational rational(long span = 5, long den = 3);
  /// Nonzero variant of rational().
  Rational nonzero_rational(long span = 5, long den = 3);
  std::uint64_t next() { return g_(); }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

enum class Want : std::uint8_t { Any, Even, Odd };

struct PolyShape {
  /// Symbols that may appear. Empty means every symbol of the table.
  std::vector<std::uint32_t> symbols;
  unsigned max_terms = 4;
  unsigned max_even_degree = 2;
  unsigned max_odd = 3;
  Want want = Want::Any;
  bool gaussian = false;
};

SuperPolynomial random_poly(Rng& rng, const TablePtr& table, const PolyShape& shape);

DAElement<Rational> random_element(Rng& rng, DivAlg a, long span = 4);

}  // namespace sg
