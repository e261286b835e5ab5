#pragma once

#include <cstddef>
#include <cstdint>

namespace ehk {

// Resource caps.  Defaults can be overridden by environment variables
// (EHK_MAX_SLICE_DIM, EHK_MAX_DEGREE) and by CLI flags on top of that.
// Exceeding a cap raises CapacityError; it never silently truncates.
struct Config {
  // Largest admissible dimension of a single degree slice.
  std::size_t max_slice_dim = 200000;
  // Largest cohomological degree any slice computation will touch.
  std::uint32_t max_degree = 64;
  // Above this slice dimension the membership solver switches from direct
  // exact elimination to the certified multi-modular path.  Tuning knob
  // only: both paths return exactly verified answers.
  std::size_t exact_dim_limit = 1200;

  // Reads EHK_MAX_SLICE_DIM / EHK_MAX_DEGREE if set (base-10, positive).
  static Config from_env();
};

}  // namespace ehk
