// Seeded property suites, one per module.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supergrass/report.hpp"

namespace sg {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random instances per randomized check.
  unsigned cases = 100;
  /// Restricts the minkowski suite to one k in {1, 2, 4, 8}.
  std::optional<unsigned> k;
  /// Worker threads; 0 means default_threads().
  unsigned threads = 0;
};

/// kernel, divalg, superspace, morphisms, minkowski, models, expr_io.
const std::vector<std::string>& suite_names();

/// Hardware concurrency, capped by SUPERGRASS_THREADS when set.
unsigned default_threads();

/// Runs one suite or "all". Every check draws from its own generator seeded by
/// (seed, check id), so results do not depend on scheduling. Throws
/// PreconditionError for an unknown suite name or an invalid k.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace sg
