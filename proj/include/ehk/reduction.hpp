#pragma once

#include <cstdint>
#include <vector>

#include "ehk/graph.hpp"
#include "ehk/model.hpp"

namespace ehk {

// Numeric data of the construction for (G, k), n = |V|, kappa = 2k - 3:
//   d_graph   = ceil((kappa * |E| - n) / 2)
//   d_family  = ceil((n * (n-1) * kappa - n) / 2)   (depends on n, k only)
//   z_degree  = 4 * (d_family + n) + 3
//   z_power   = 2 * (d_family + n + 1)              (so deg x^z_power = z_degree + 1)
// d_family bounds d_graph over all graphs on n vertices; the z generators
// are chosen in a degree determined by n and k alone so that one ambient
// family contains every graph of that size.
struct ReductionConstants {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::int64_t d_graph = 0;
  std::int64_t d_family = 0;
  std::uint32_t z_degree = 0;
  std::uint32_t z_power = 0;
};

// Throws StructuralError for k < 3 (the construction needs kappa >= 3 odd).
ReductionConstants reduction_constants(const Graph& g, std::uint32_t k);

// sum_{l=1..k} x_i^{k-l} x_j^{l-1}, homogeneous of degree 2(k-1) in the even
// generators of `model` (vertex v <-> generator id v-1).
Poly edge_polynomial(const SullivanModel& model, std::uint32_t k,
                     std::uint32_t i, std::uint32_t j);

// The vertex-and-edge model: x_v (degree 2, closed) for each vertex, and
// y_i_j (degree 2k-3) with d(y_i_j) the edge polynomial, for each edge.
// Generator ids: x_1..x_n are 0..n-1, then edges in lexicographic order.
SullivanModel build_vertex_edge_model(const Graph& g, std::uint32_t k);

// The stabilized model: the vertex-and-edge model plus z_v of degree
// z_degree with d(z_v) = x_v^{z_power}, for each vertex.
SullivanModel build_stabilized_model(const Graph& g, std::uint32_t k);

// One closed replacement generator for z_v, valid when the vertex-and-edge
// model is elliptic:  z'_v = z_v - w_v * x_v^{z_power - d_graph - 1},  where
// w_v (odd, degree 2*d_graph + 1) satisfies d(w_v) = x_v^{d_graph + 1}.
// Then d(z'_v) = 0 and deg z'_v = z_degree, exhibiting the stabilized model
// as (vertex-edge part) tensor a free closed odd factor in each z'_v.
struct SplitGenerator {
  std::uint32_t vertex = 0;   // 1-based
  Poly witness;               // w_v, an odd element of the vertex-edge model
  Poly z_prime;               // element of the stabilized model
};

// `witnesses[v-1]` must satisfy d(witness) = x_v^{d_graph+1} in the
// vertex-edge model; this is re-verified, as are d(z'_v) = 0 and
// deg z'_v = z_degree, before returning.  Throws InconsistencyError if any
// check fails.
std::vector<SplitGenerator> build_splitting(const Graph& g, std::uint32_t k,
                                            const std::vector<Poly>& witnesses);

}  // namespace ehk
