#pragma once

// Cross-verification harness: sweeps graphs, decides ellipticity by both
// methods, re-validates every certificate, checks the splitting and the
// threshold answers, and reports a deterministic pass/fail matrix.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ehk/config.hpp"
#include "ehk/graph.hpp"

namespace ehk {

struct VerifyOptions {
  std::uint32_t nmax = 4;      // exhaustive for n <= min(nmax, 4)
  std::uint32_t k = 3;         // number of colors, >= 3
  std::uint32_t sample = 500;  // random distinct connected graphs at n = 5
  std::uint64_t seed = 1;      // sampling seed
};

struct VerifyOutcome {
  bool passed = false;
  std::uint64_t instances = 0;
  std::uint64_t elliptic_count = 0;
  std::uint64_t colorable_count = 0;
  std::vector<std::string> violations;  // human-readable, one per failure
  nlohmann::ordered_json report;        // deterministic full report
  std::string text;                     // deterministic pass/fail matrix
};

// Instance checks, in order: constants arithmetic, model validation, the
// two-method ellipticity decision with certificate re-validation, an
// independent per-component coloring recomputation, the splitting (elliptic
// side), the evaluation point at the threshold power plus the stabilizer
// degree bound (non-elliptic side), and for n <= 4 a membership-solver
// cross-check of the threshold non-exactness.
VerifyOutcome run_verify(const VerifyOptions& opts, const Config& cfg);

}  // namespace ehk
