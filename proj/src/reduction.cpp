#include "ehk/reduction.hpp"

#include <string>

#include "ehk/errors.hpp"

namespace ehk {

namespace {

// ceil(a / b) for b > 0 and a of either sign.
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b > 0) ++q;
  return q;
}

std::string vertex_name(std::uint32_t v) { return "x" + std::to_string(v); }

std::string edge_name(std::uint32_t i, std::uint32_t j) {
  return "y" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

ReductionConstants reduction_constants(const Graph& g, std::uint32_t k) {
  if (k < 3)
    throw StructuralError("k must be >= 3 (got " + std::to_string(k) + ")");
  if (g.n == 0) throw StructuralError("graph must have at least one vertex");
  ReductionConstants c;
  c.n = g.n;
  c.k = k;
  const std::int64_t kappa = 2 * static_cast<std::int64_t>(k) - 3;
  const std::int64_t n = g.n;
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  c.d_graph = ceil_div(kappa * m - n, 2);
  c.d_family = ceil_div(n * (n - 1) * kappa - n, 2);
  const std::int64_t zdeg = 4 * (c.d_family + n) + 3;
  const std::int64_t zpow = 2 * (c.d_family + n + 1);
  if (zdeg > 0xffffffffll)
    throw CapacityError("stabilizer degree exceeds representable range");
  c.z_degree = static_cast<std::uint32_t>(zdeg);
  c.z_power = static_cast<std::uint32_t>(zpow);
  return c;
}

Poly edge_polynomial(const SullivanModel& model, std::uint32_t k,
                     std::uint32_t i, std::uint32_t j) {
  // sum_{l=1..k} x_i^{k-l} x_j^{l-1}; both exponents can be zero, so the
  // l-th term is built as a product of optional powers.
  std::vector<Poly::Term> terms;
  for (std::uint32_t l = 1; l <= k; ++l) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ev;
    if (k - l > 0) ev.emplace_back(i - 1, k - l);
    if (l - 1 > 0) ev.emplace_back(j - 1, l - 1);
    terms.emplace_back(make_monomial(model.table(), std::move(ev), {}),
                       Rational(1));
  }
  return Poly::from_terms(std::move(terms));
}

SullivanModel build_vertex_edge_model(const Graph& g, std::uint32_t k) {
  const ReductionConstants c = reduction_constants(g, k);
  SullivanModel model;
  const std::uint32_t y_degree = 2 * k - 3;
  for (std::uint32_t v = 1; v <= g.n; ++v)
    model.gens.push_back(make_generator(v - 1, vertex_name(v), 2, Parity::even));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [i, j] = g.edges[e];
    model.gens.push_back(make_generator(
        static_cast<std::uint32_t>(g.n + e), edge_name(i, j), y_degree,
        Parity::odd));
  }
  model.diff.assign(model.gens.size(), Poly::zero());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [i, j] = g.edges[e];
    model.diff[g.n + e] = edge_polynomial(model, k, i, j);
  }
  (void)c;
  return model;
}

SullivanModel build_stabilized_model(const Graph& g, std::uint32_t k) {
  const ReductionConstants c = reduction_constants(g, k);
  SullivanModel model = build_vertex_edge_model(g, k);
  const std::uint32_t base = static_cast<std::uint32_t>(model.gens.size());
  for (std::uint32_t v = 1; v <= g.n; ++v)
    model.gens.push_back(make_generator(base + v - 1, "z" + std::to_string(v),
                                        c.z_degree, Parity::odd));
  model.diff.resize(model.gens.size(), Poly::zero());
  for (std::uint32_t v = 1; v <= g.n; ++v)
    model.diff[base + v - 1] =
        even_power_poly(model.table(), v - 1, c.z_power);
  return model;
}

std::vector<SplitGenerator> build_splitting(const Graph& g, std::uint32_t k,
                                            const std::vector<Poly>& witnesses) {
  const ReductionConstants c = reduction_constants(g, k);
  if (witnesses.size() != g.n)
    throw StructuralError("need one witness per vertex");
  if (c.d_graph < 0)
    throw StructuralError(
        "splitting undefined: nilpotence exponent would be nonpositive");

  const SullivanModel vertex_edge = build_vertex_edge_model(g, k);
  const SullivanModel stabilized = build_stabilized_model(g, k);
  const std::uint32_t nilpotence =
      static_cast<std::uint32_t>(c.d_graph) + 1;
  const std::uint32_t correction_power = c.z_power - nilpotence;

  std::vector<SplitGenerator> out;
  for (std::uint32_t v = 1; v <= g.n; ++v) {
    const Poly& w = witnesses[v - 1];
    // d(w_v) = x_v^{d_graph+1}, checked in the vertex-edge model so the
    // witness cannot smuggle in z generators.
    const Poly expected = even_power_poly(vertex_edge.table(), v - 1, nilpotence);
    if (apply_differential(vertex_edge, w) != expected)
      throw InconsistencyError("witness for vertex " + std::to_string(v) +
                               " does not satisfy d(w) = x^" +
                               std::to_string(nilpotence));

    // z'_v = z_v - w_v * x_v^{z_power - d_graph - 1}.  Monomials of the
    // vertex-edge model are valid verbatim in the stabilized model (shared
    // generator prefix), so w lifts without translation.
    const std::uint32_t z_id =
        static_cast<std::uint32_t>(vertex_edge.gens.size()) + v - 1;
    Poly z = Poly::single(make_monomial(stabilized.table(), {}, {z_id}));
    Poly correction =
        w * even_power_poly(stabilized.table(), v - 1, correction_power);
    SplitGenerator sg;
    sg.vertex = v;
    sg.witness = w;
    sg.z_prime = z - correction;

    const auto deg = sg.z_prime.homogeneous_degree();
    if (!deg || *deg != c.z_degree)
      throw InconsistencyError("z' for vertex " + std::to_string(v) +
                               " is not homogeneous of the stabilizer degree");
    if (!apply_differential(stabilized, sg.z_prime).is_zero())
      throw InconsistencyError("z' for vertex " + std::to_string(v) +
                               " is not closed");
    out.push_back(std::move(sg));
  }
  return out;
}

}  // namespace ehk
