#pragma once

#include <string>
#include <vector>

#include "newtonspec/poly.hpp"
#include "newtonspec/spectrum.hpp"

namespace newtonspec {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct InvariantResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Cross-checks every spectrum route and combinatorial identity on one input.
/// Checks that need a simplicial fan are skipped otherwise. Exceptions raised
/// inside a check are reported as failures of that check.
std::vector<InvariantResult> run_invariants(const Poly& p, const SpectrumOptions& opts = {});

/// True when no result failed.
bool all_passed(const std::vector<InvariantResult>& results);

}  // namespace newtonspec
