#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehk/config.hpp"
#include "ehk/graph.hpp"
#include "ehk/membership.hpp"
#include "ehk/model.hpp"
#include "ehk/reduction.hpp"

namespace ehk {

enum class Method : std::uint8_t { algebraic, coloring, both };

// A point with root-of-unity (or zero) coordinates: vertex v carries
// zeta_k^{exponents[v-1]}, or 0 when the entry is nullopt.  Evaluation at
// such a point is a ring homomorphism, so a point that kills every edge
// polynomial but not x_v^N certifies x_v^N outside the ideal slice — an
// exact non-exactness certificate that costs |E| cyclotomic evaluations.
struct EvaluationPoint {
  std::uint32_t order = 0;  // k
  std::vector<std::optional<std::uint32_t>> exponents;
};

// Checks, in exact cyclotomic arithmetic, that `point` annihilates the edge
// polynomial of every edge of g and evaluates to a nonzero value on
// x_vertex^power.
bool check_evaluation_point(const Graph& g, std::uint32_t k,
                            const EvaluationPoint& point, std::uint32_t vertex,
                            std::uint64_t power);

// Checks a claimed coloring certificate: `coloring` must be a proper
// k-coloring of the subgraph induced by `support` (1-based vertices), and
// the induced evaluation point (zeta^color on the support, 0 elsewhere) must
// pass check_evaluation_point.  This is the full re-validation applied to
// every coloring-derived non-ellipticity certificate.
bool check_noncoloring_certificate(const Graph& g, std::uint32_t k,
                                   const std::vector<std::uint32_t>& support,
                                   const std::vector<std::uint32_t>& coloring);

struct EllipticityVerdict {
  bool elliptic = false;
  Method method = Method::both;
  // Exponent N = d_graph + 1 at which nilpotence of every [x_v] was tested
  // (clamped to 1 when the formula is nonpositive, which forces an isolated
  // vertex and a trivially non-elliptic model).
  std::uint32_t tested_power = 0;

  // Elliptic side (algebraic): per vertex v an odd element w_v of the
  // vertex-edge model with d(w_v) = x_v^tested_power, re-verified by
  // applying the differential.
  std::vector<Poly> witnesses;

  // Non-elliptic side.  Algebraic route: the vertex whose power escaped the
  // ideal slice plus the verified functional.  Coloring route: a proper
  // coloring of a colorable component plus its evaluation point.
  // witness_vertex always pairs with the point when one is present (the two
  // routes may anchor at different vertices); functional_vertex pairs with
  // the functional.
  std::optional<std::uint32_t> witness_vertex;
  std::optional<std::uint32_t> functional_vertex;
  SparseVec functional;                  // over the slice of functional_degree
  std::uint32_t functional_degree = 0;
  std::optional<std::vector<std::uint32_t>> colorable_component;  // vertices
  std::optional<std::vector<std::uint32_t>> component_coloring;   // per component vertex
  std::optional<EvaluationPoint> point;

  // Set when the coloring method concluded "elliptic": the claim rests on
  // exhausting the search on every component (no compact certificate).
  bool exhaustive_coloring_search = false;

  std::vector<std::string> notes;
};

// Decides ellipticity of the vertex-edge model by testing, for each vertex,
// membership of x_v^{d_graph+1} in the ideal slice spanned by the edge
// differentials.  Certificates are exact and re-verified.
EllipticityVerdict is_elliptic_algebraic(const Graph& g, std::uint32_t k,
                                         const Config& cfg);

// Decides ellipticity through colorability, componentwise: the model is
// elliptic iff no connected component is k-colorable.  Non-ellipticity is
// certified by a coloring and its evaluation point.
EllipticityVerdict is_elliptic_coloring(const Graph& g, std::uint32_t k);

// Runs the requested method(s); with Method::both the verdicts must agree
// (InconsistencyError otherwise — that is a library bug, not an input
// property) and the certificates are merged.
EllipticityVerdict is_elliptic(const Graph& g, std::uint32_t k, Method method,
                               const Config& cfg);

}  // namespace ehk
