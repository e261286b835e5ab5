#include "ehk/coloring.hpp"

#include <algorithm>

namespace ehk {

ColoringResult find_coloring(const Graph& g, std::uint32_t k) {
  ColoringResult out;
  if (g.n == 0) {
    out.colorable = true;
    return out;
  }

  std::vector<std::vector<std::uint32_t>> adj(g.n + 1);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::vector<std::uint32_t> order(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) order[v] = v + 1;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return adj[a].size() > adj[b].size();
                   });

  std::vector<std::int64_t> color(g.n + 1, -1);
  // colors_used: how many distinct colors appear so far; trying color
  // colors_used first among fresh ones breaks color-permutation symmetry.
  auto dfs = [&](auto&& self, std::size_t pos, std::uint32_t colors_used) -> bool {
    if (pos == order.size()) return true;
    const std::uint32_t v = order[pos];
    const std::uint32_t limit = std::min(k, colors_used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (std::uint32_t w : adj[v])
        if (color[w] == static_cast<std::int64_t>(c)) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[v] = c;
      if (self(self, pos + 1, std::max(colors_used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };

  if (!dfs(dfs, 0, 0)) return out;
  out.colorable = true;
  out.coloring.resize(g.n);
  for (std::uint32_t v = 1; v <= g.n; ++v)
    out.coloring[v - 1] = static_cast<std::uint32_t>(color[v]);
  return out;
}

bool is_proper_coloring(const Graph& g, std::uint32_t k,
                        const std::vector<std::uint32_t>& coloring) {
  if (coloring.size() != g.n) return false;
  for (std::uint32_t c : coloring)
    if (c >= k) return false;
  for (const auto& [a, b] : g.edges)
    if (coloring[a - 1] == coloring[b - 1]) return false;
  return true;
}

}  // namespace ehk
