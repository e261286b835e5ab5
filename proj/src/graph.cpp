#include "ehk/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ehk/errors.hpp"

namespace ehk {

Graph Graph::from_edges(
    std::uint32_t n,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  Graph g;
  g.n = n;
  for (auto& [a, b] : edges) {
    if (a == b)
      throw ParseError("loop at vertex " + std::to_string(a));
    if (a < 1 || a > n || b < 1 || b > n)
      throw ParseError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range 1.." + std::to_string(n));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

Graph Graph::parse_dimacs(std::string_view text) {
  std::uint32_t n = 0;
  bool saw_p = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++lineno;

    std::istringstream ss{std::string(line)};
    std::string tok;
    if (!(ss >> tok)) continue;  // blank
    if (tok == "c") continue;    // comment

    auto fail = [lineno](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    if (tok == "p") {
      if (saw_p) throw fail("duplicate problem line");
      std::string fmt;
      long long pn = -1, pm = -1;
      if (!(ss >> fmt >> pn >> pm) || (fmt != "edge" && fmt != "col"))
        throw fail("expected 'p edge <n> <m>'");
      if (pn < 1 || pn > 1000000) throw fail("vertex count out of range");
      n = static_cast<std::uint32_t>(pn);
      saw_p = true;
    } else if (tok == "e") {
      if (!saw_p) throw fail("edge before problem line");
      long long a = -1, b = -1;
      if (!(ss >> a >> b)) throw fail("expected 'e <i> <j>'");
      if (a == b) throw fail("loop at vertex " + std::to_string(a));
      if (a < 1 || b < 1 || a > n || b > n)
        throw fail("edge endpoint out of range 1.." + std::to_string(n));
      edges.emplace_back(static_cast<std::uint32_t>(a),
                         static_cast<std::uint32_t>(b));
    } else {
      throw fail("unrecognized record '" + tok + "'");
    }
  }
  if (!saw_p) throw ParseError("missing 'p edge' problem line");
  return from_edges(n, std::move(edges));
}

std::string Graph::to_dimacs() const {
  std::ostringstream out;
  out << "p edge " << n << " " << edges.size() << "\n";
  for (const auto& [a, b] : edges) out << "e " << a << " " << b << "\n";
  return out.str();
}

Graph Graph::complete(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return from_edges(n, std::move(edges));
}

Graph Graph::cycle(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(1, n);
  return from_edges(n, std::move(edges));
}

Graph Graph::from_edge_bits(std::uint32_t n, std::uint64_t bits) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t b = 0;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j, ++b)
      if (bits & (1ull << b)) edges.emplace_back(i, j);
  return from_edges(n, std::move(edges));
}

std::uint64_t Graph::to_edge_bits() const {
  std::uint64_t bits = 0;
  std::uint32_t b = 0;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j, ++b)
      if (std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j)))
        bits |= (1ull << b);
  return bits;
}

std::uint32_t Graph::degree_of(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<std::vector<std::uint32_t>> Graph::components() const {
  std::vector<std::vector<std::uint32_t>> adj(n + 1);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<std::uint32_t>> comps;
  for (std::uint32_t s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::uint32_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::connected() const { return components().size() <= 1; }

Graph Graph::induced(const std::vector<std::uint32_t>& vertices) const {
  std::vector<std::uint32_t> relabel(n + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    relabel[vertices[i]] = static_cast<std::uint32_t>(i + 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sub;
  for (const auto& [a, b] : edges)
    if (relabel[a] != 0 && relabel[b] != 0)
      sub.emplace_back(relabel[a], relabel[b]);
  return from_edges(static_cast<std::uint32_t>(vertices.size()), std::move(sub));
}

}  // namespace ehk
