#include "ehk/ellipticity.hpp"

#include <algorithm>

#include "ehk/coloring.hpp"
#include "ehk/cyclotomic.hpp"
#include "ehk/errors.hpp"

namespace ehk {

bool check_evaluation_point(const Graph& g, std::uint32_t k,
                            const EvaluationPoint& point, std::uint32_t vertex,
                            std::uint64_t power) {
  if (point.order != k || point.exponents.size() != g.n) return false;
  if (vertex < 1 || vertex > g.n) return false;
  const Cyclotomic field(k);

  // Edge polynomial value: sum_{l=1..k} a^{k-l} b^{l-1} with a, b the
  // endpoint values.  Zero endpoint values kill every term that contains
  // them; with k >= 2 no term avoids both endpoints.
  auto value_power = [&](std::uint32_t v,
                         std::uint64_t p) -> std::optional<Cyclotomic::Elt> {
    const auto& e = point.exponents[v - 1];
    if (!e) return p == 0 ? std::optional(field.one()) : std::nullopt;
    return field.root_power(static_cast<std::uint64_t>(*e) * p);
  };

  for (const auto& [i, j] : g.edges) {
    Cyclotomic::Elt acc = field.zero();
    for (std::uint32_t l = 1; l <= k; ++l) {
      const auto va = value_power(i, k - l);
      const auto vb = value_power(j, l - 1);
      if (!va || !vb) continue;  // term contains a zero factor
      acc = field.add(acc, field.mul(*va, *vb));
    }
    if (!field.is_zero(acc)) return false;
  }

  const auto target = value_power(vertex, power);
  if (!target) return false;  // vertex value 0: power vanishes, no certificate
  if (field.is_zero(*target)) return false;
  return true;
}

bool check_noncoloring_certificate(const Graph& g, std::uint32_t k,
                                   const std::vector<std::uint32_t>& support,
                                   const std::vector<std::uint32_t>& coloring) {
  if (support.empty() || coloring.size() != support.size()) return false;
  for (std::uint32_t v : support)
    if (v < 1 || v > g.n) return false;
  for (std::uint32_t c : coloring)
    if (c >= k) return false;
  // Proper on the induced subgraph, and no edge may leave the support when
  // the support is a union of components; for the certificate only the
  // induced properness matters, cross edges are handled by the point check.
  std::vector<std::int64_t> color_of(g.n + 1, -1);
  for (std::size_t i = 0; i < support.size(); ++i)
    color_of[support[i]] = coloring[i];
  for (const auto& [a, b] : g.edges)
    if (color_of[a] >= 0 && color_of[b] >= 0 && color_of[a] == color_of[b])
      return false;

  EvaluationPoint point;
  point.order = k;
  point.exponents.assign(g.n, std::nullopt);
  for (std::size_t i = 0; i < support.size(); ++i)
    point.exponents[support[i] - 1] = coloring[i];
  // Any support vertex works as the nonvanishing witness; use the first.
  return check_evaluation_point(g, k, point, support.front(), 1);
}

namespace {

std::uint32_t tested_power_for(const ReductionConstants& c) {
  return c.d_graph >= 0 ? static_cast<std::uint32_t>(c.d_graph) + 1 : 1;
}

}  // namespace

EllipticityVerdict is_elliptic_algebraic(const Graph& g, std::uint32_t k,
                                         const Config& cfg) {
  const ReductionConstants c = reduction_constants(g, k);
  EllipticityVerdict v;
  v.method = Method::algebraic;
  v.tested_power = tested_power_for(c);

  if (c.d_graph < 0) {
    // kappa |E| <= n - 2 forces an isolated vertex; its indicator point is
    // a permanent non-nilpotence certificate.
    for (std::uint32_t u = 1; u <= g.n; ++u) {
      if (g.degree_of(u) != 0) continue;
      EvaluationPoint point;
      point.order = k;
      point.exponents.assign(g.n, std::nullopt);
      point.exponents[u - 1] = 0;  // value 1
      if (!check_evaluation_point(g, k, point, u, v.tested_power))
        throw InconsistencyError("isolated-vertex certificate failed");
      v.elliptic = false;
      v.witness_vertex = u;
      v.point = point;
      v.notes.push_back("vertex " + std::to_string(u) +
                        " is isolated; [x] is non-nilpotent");
      return v;
    }
    throw InconsistencyError(
        "nonpositive nilpotence exponent without an isolated vertex");
  }

  const SullivanModel model = build_vertex_edge_model(g, k);
  std::vector<Poly> edge_gens;
  edge_gens.reserve(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    edge_gens.push_back(model.diff[g.n + e]);

  // All n targets live in one degree slice, so the solver shares a single
  // elimination across them.
  std::vector<Poly> targets;
  targets.reserve(g.n);
  for (std::uint32_t vert = 1; vert <= g.n; ++vert)
    targets.push_back(even_power_poly(model.table(), vert - 1, v.tested_power));
  std::vector<Membership> ms =
      ideal_slice_membership_batch(model, targets, edge_gens, cfg);

  for (std::uint32_t vert = 1; vert <= g.n; ++vert) {
    Membership& m = ms[vert - 1];
    if (m.member) continue;
    v.elliptic = false;
    v.witness_vertex = vert;
    v.functional_vertex = vert;
    v.functional = std::move(m.functional);
    v.functional_degree = m.target_degree;
    v.notes.push_back("x" + std::to_string(vert) + "^" +
                      std::to_string(v.tested_power) +
                      " is not exact (verified functional)");
    return v;
  }

  std::vector<Poly> witnesses(g.n);
  for (std::uint32_t vert = 1; vert <= g.n; ++vert) {
    // w_v = sum_e p_e y_e satisfies d(w_v) = sum_e p_e dy_e in a pure model.
    Poly w;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const Monomial y =
          make_monomial(model.table(), {}, {static_cast<std::uint32_t>(g.n + e)});
      w = w + ms[vert - 1].witness[e] * Poly::single(y);
    }
    if (!(apply_differential(model, w) == targets[vert - 1]))
      throw InconsistencyError(
          "nilpotence witness failed differential re-check");
    witnesses[vert - 1] = std::move(w);
  }
  v.elliptic = true;
  v.witnesses = std::move(witnesses);
  return v;
}

EllipticityVerdict is_elliptic_coloring(const Graph& g, std::uint32_t k) {
  const ReductionConstants c = reduction_constants(g, k);
  EllipticityVerdict v;
  v.method = Method::coloring;
  v.tested_power = tested_power_for(c);

  const auto comps = g.components();
  if (comps.size() > 1)
    v.notes.push_back(
        "graph is disconnected; colorability is interpreted componentwise");
  for (const auto& comp : comps) {
    const Graph sub = g.induced(comp);
    const ColoringResult res = find_coloring(sub, k);
    if (!res.colorable) continue;
    v.elliptic = false;
    v.colorable_component = comp;
    v.component_coloring = res.coloring;
    EvaluationPoint point;
    point.order = k;
    point.exponents.assign(g.n, std::nullopt);
    for (std::size_t i = 0; i < comp.size(); ++i)
      point.exponents[comp[i] - 1] = res.coloring[i];
    if (!check_noncoloring_certificate(g, k, comp, res.coloring))
      throw InconsistencyError("coloring certificate failed re-validation");
    v.point = point;
    v.witness_vertex = comp.front();
    v.notes.push_back(
        "component {" + std::to_string(comp.front()) +
        ", ...} is k-colorable; its evaluation point kills every edge "
        "polynomial");
    return v;
  }
  v.elliptic = true;
  v.exhaustive_coloring_search = true;
  return v;
}

EllipticityVerdict is_elliptic(const Graph& g, std::uint32_t k, Method method,
                               const Config& cfg) {
  if (method == Method::algebraic) return is_elliptic_algebraic(g, k, cfg);
  if (method == Method::coloring) return is_elliptic_coloring(g, k);

  EllipticityVerdict alg = is_elliptic_algebraic(g, k, cfg);
  EllipticityVerdict col = is_elliptic_coloring(g, k);
  if (alg.elliptic != col.elliptic)
    throw InconsistencyError(
        "ellipticity methods disagree (algebraic says " +
        std::string(alg.elliptic ? "yes" : "no") + ", coloring says " +
        std::string(col.elliptic ? "yes" : "no") + ")");

  EllipticityVerdict merged = std::move(alg);
  merged.method = Method::both;
  merged.exhaustive_coloring_search = col.exhaustive_coloring_search;
  if (col.colorable_component) {
    merged.colorable_component = std::move(col.colorable_component);
    merged.component_coloring = std::move(col.component_coloring);
    merged.point = std::move(col.point);
    // Keep the point/vertex pair coherent: the point certifies
    // non-nilpotence at the coloring route's vertex, which may differ from
    // the functional's vertex on mixed disconnected graphs.
    merged.witness_vertex = col.witness_vertex;
  }
  for (const auto& n : col.notes) merged.notes.push_back(n);
  return merged;
}

}  // namespace ehk
