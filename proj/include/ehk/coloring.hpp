#pragma once

#include <cstdint>
#include <vector>

#include "ehk/graph.hpp"

namespace ehk {

struct ColoringResult {
  bool colorable = false;
  // Colors 0..k-1 indexed by vertex-1; meaningful only when colorable.
  std::vector<std::uint32_t> coloring;
};

// Deterministic exhaustive search: vertices ordered by descending degree
// (ties by index), colors tried in canonical order with symmetry breaking
// (a vertex may open at most one fresh color).  Exact: `colorable == false`
// means the search space was exhausted.
ColoringResult find_coloring(const Graph& g, std::uint32_t k);

bool is_proper_coloring(const Graph& g, std::uint32_t k,
                        const std::vector<std::uint32_t>& coloring);

}  // namespace ehk
