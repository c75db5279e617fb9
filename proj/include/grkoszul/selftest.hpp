#pragma once
#include <string>
#include <vector>

namespace grk {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct SelftestResult {
  std::vector<SelftestCheck> checks;
  double seconds = 0;
  bool ok() const;
};
// Fast end-to-end sanity run over the bundled models and small root systems.
SelftestResult run_selftest();

}  // namespace grk
