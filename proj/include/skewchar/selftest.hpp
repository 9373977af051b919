#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewchar/engine.hpp"

namespace skewchar {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestHooks {
  /// Builder of the symbolic A - Lambda used by the expansion checks.
  /// Tests swap in a broken builder to confirm the suite notices.
  std::function<SymbolicMatrix(const SymmetricMatrix&)> build = build_symbolic;
};

/// Quick embedded versions of the acceptance checks (golden expansions,
/// expand/eval agreement, covariance, parity, witnesses, certificates,
/// Pfaffians). Deterministic.
std::vector<SelftestCheck> run_selftest(const SelftestHooks& hooks = {});

}  // namespace skewchar
