// Result of a verification routine.
#pragma once

#include <string>

namespace sg {

struct CheckOutcome {
  bool ok = true;
  std::string detail;

  static CheckOutcome fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace sg
