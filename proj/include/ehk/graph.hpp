#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ehk {

// A finite simple graph with 1-based vertex labels 1..n and a normalized
// edge set: each edge stored once as (i, j) with i < j, sorted
// lexicographically, duplicates removed.  Loops are rejected at construction.
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  static Graph from_edges(std::uint32_t n,
                          std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  // DIMACS .col:  "c ..." comments, one "p edge <n> <m>" line, "e <i> <j>"
  // edge lines.  Parse errors carry 1-based line numbers.  The declared m is
  // not trusted; the edge set is deduplicated.
  static Graph parse_dimacs(std::string_view text);
  std::string to_dimacs() const;

  static Graph complete(std::uint32_t n);
  static Graph cycle(std::uint32_t n);

  // Decodes bit b of `bits` as presence of the b-th pair in the order
  // (1,2),(1,3),...,(1,n),(2,3),...  Requires C(n,2) <= 64.
  static Graph from_edge_bits(std::uint32_t n, std::uint64_t bits);
  std::uint64_t to_edge_bits() const;

  std::size_t edge_count() const { return edges.size(); }
  std::uint32_t degree_of(std::uint32_t v) const;

  // Connected components as sorted vertex lists, sorted by least vertex.
  // Induced subgraph keeps this graph's labels compacted to 1..|C|.
  std::vector<std::vector<std::uint32_t>> components() const;
  bool connected() const;
  Graph induced(const std::vector<std::uint32_t>& vertices) const;
};

}  // namespace ehk
