#include "ehk/verify.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "ehk/coloring.hpp"
#include "ehk/ellipticity.hpp"
#include "ehk/errors.hpp"
#include "ehk/membership.hpp"
#include "ehk/model.hpp"
#include "ehk/reduction.hpp"
#include "ehk/report.hpp"

namespace ehk {

namespace {

struct InstanceOutcome {
  bool connected = false;
  bool colorable = false;  // some component is k-colorable
  bool elliptic = false;
  std::int64_t d_graph = 0;
  std::uint32_t checks = 0;
  std::vector<std::string> failures;
};

InstanceOutcome check_instance(const Graph& g, std::uint32_t k,
                               const Config& cfg) {
  InstanceOutcome out;
  out.connected = g.connected();
  auto run = [&](const char* name, auto&& fn) {
    ++out.checks;
    try {
      fn();
      return true;
    } catch (const std::exception& e) {
      out.failures.push_back(std::string(name) + ": " + e.what());
      return false;
    }
  };

  const ReductionConstants c = reduction_constants(g, k);
  out.d_graph = c.d_graph;
  const std::int64_t kappa = 2 * static_cast<std::int64_t>(k) - 3;
  const std::int64_t fd_expected =
      kappa * static_cast<std::int64_t>(g.edges.size()) - g.n;
  const std::int64_t threshold_power = c.d_family + g.n + 1;

  run("constants", [&] {
    if (c.d_graph > c.d_family)
      throw InconsistencyError("d_graph exceeds d_family");
    if (c.z_degree != 4 * (c.d_family + g.n) + 3)
      throw InconsistencyError("z_degree formula mismatch");
    if (c.z_power != 2 * (c.d_family + g.n + 1))
      throw InconsistencyError("z_power formula mismatch");
    // The slice degree of the nilpotence test stays below the stabilizer
    // degree, so both models see the same low-degree cohomology.
    if (c.d_graph >= 0 &&
        2 * (c.d_graph + 1) > static_cast<std::int64_t>(c.z_degree))
      throw InconsistencyError("nilpotence degree reaches the stabilizers");
    // ... and so does the threshold power itself.
    if (static_cast<std::int64_t>(c.z_degree) + 1 <= 2 * threshold_power)
      throw InconsistencyError("stabilizer degree bound violated");
  });

  SullivanModel vertex_edge;
  SullivanModel stabilized;
  bool models_ok = run("models", [&] {
    vertex_edge = build_vertex_edge_model(g, k);
    stabilized = build_stabilized_model(g, k);
    auto first_detail = [](const ValidationReport& r) {
      return r.detail.empty() ? std::string("unspecified") : r.detail.front();
    };
    if (!validate(vertex_edge).all())
      throw InconsistencyError("vertex-edge model fails validation: " +
                               first_detail(validate(vertex_edge)));
    if (!validate(stabilized).all())
      throw InconsistencyError("stabilized model fails validation: " +
                               first_detail(validate(stabilized)));
    if (formal_dimension(vertex_edge) != fd_expected)
      throw InconsistencyError("vertex-edge formal dimension mismatch");
    if (formal_dimension(stabilized) !=
        fd_expected + static_cast<std::int64_t>(g.n) * c.z_degree)
      throw InconsistencyError("stabilized formal dimension mismatch");
  });
  if (!models_ok) return out;

  std::optional<EllipticityVerdict> verdict;
  run("two_method_decision", [&] {
    verdict = is_elliptic(g, k, Method::both, cfg);
    out.elliptic = verdict->elliptic;
  });
  if (!verdict) return out;

  run("independent_coloring", [&] {
    bool some = false;
    for (const auto& comp : g.components())
      if (find_coloring(g.induced(comp), k).colorable) some = true;
    out.colorable = some;
    if (some == verdict->elliptic)
      throw InconsistencyError(
          "some-component-colorable must equal non-elliptic");
  });

  if (verdict->elliptic) {
    run("witness_certificates", [&] {
      if (c.d_graph < 0)
        throw InconsistencyError("elliptic with negative d_graph");
      if (verdict->tested_power != static_cast<std::uint64_t>(c.d_graph) + 1)
        throw InconsistencyError("nilpotence exponent is not d_graph + 1");
      if (verdict->witnesses.size() != g.n)
        throw InconsistencyError("one witness per vertex expected");
      for (std::uint32_t v = 1; v <= g.n; ++v) {
        const Poly target =
            even_power_poly(vertex_edge.table(), v - 1, verdict->tested_power);
        const auto wdeg = verdict->witnesses[v - 1].homogeneous_degree();
        if (!wdeg || *wdeg != 2 * verdict->tested_power - 1)
          throw InconsistencyError("witness degree mismatch");
        if (!(apply_differential(vertex_edge, verdict->witnesses[v - 1]) ==
              target))
          throw InconsistencyError("witness differential mismatch");
      }
    });
    run("splitting", [&] {
      const auto split = build_splitting(g, k, verdict->witnesses);
      if (split.size() != g.n)
        throw InconsistencyError("one split generator per vertex expected");
      for (const SplitGenerator& s : split) {
        if (!apply_differential(stabilized, s.z_prime).is_zero())
          throw InconsistencyError("split generator is not closed");
        const auto zdeg = s.z_prime.homogeneous_degree();
        if (!zdeg || *zdeg != c.z_degree)
          throw InconsistencyError("split generator degree mismatch");
      }
    });
    run("threshold_bound", [&] {
      // cup and cat of the vertex-edge model are at most floor(fd/2)
      // (positive classes have degree >= 2), and the splitting adds exactly
      // n; the chain floor(fd/2) <= d_graph <= d_family settles both
      // threshold answers affirmatively.
      if (fd_expected < 0)
        throw InconsistencyError("elliptic with negative formal dimension");
      if (fd_expected / 2 > c.d_graph)
        throw InconsistencyError("floor(fd/2) exceeds d_graph");
    });
  } else {
    run("coloring_certificate", [&] {
      if (!verdict->colorable_component || !verdict->component_coloring)
        throw InconsistencyError("missing coloring certificate");
      if (!check_noncoloring_certificate(g, k, *verdict->colorable_component,
                                         *verdict->component_coloring))
        throw InconsistencyError("coloring certificate failed re-validation");
    });
    run("evaluation_point", [&] {
      if (!verdict->point || !verdict->witness_vertex)
        throw InconsistencyError("missing evaluation point");
      const std::uint32_t wit = *verdict->witness_vertex;
      if (!check_evaluation_point(g, k, *verdict->point, wit,
                                  verdict->tested_power))
        throw InconsistencyError("point fails at the tested power");
      // The same point certifies every power, in particular the threshold
      // power d_family + n + 1 used for the stabilized lower bounds.
      if (!check_evaluation_point(g, k, *verdict->point, wit,
                                  static_cast<std::uint64_t>(threshold_power)))
        throw InconsistencyError("point fails at the threshold power");
    });
    if (g.n <= 4) {
      run("threshold_membership", [&] {
        // Independent route to the same fact: the threshold power of the
        // witness vertex escapes the edge ideal slice (the stabilizer
        // differentials live above this degree, per the constants check).
        const std::uint32_t wit = verdict->witness_vertex
                                      ? *verdict->witness_vertex
                                      : verdict->colorable_component->front();
        std::vector<Poly> edge_gens;
        edge_gens.reserve(g.edges.size());
        for (std::size_t e = 0; e < g.edges.size(); ++e)
          edge_gens.push_back(vertex_edge.diff[g.n + e]);
        const Poly target =
            even_power_poly(vertex_edge.table(), wit - 1,
                            static_cast<std::uint32_t>(threshold_power));
        if (ideal_slice_membership(vertex_edge, target, edge_gens, cfg).member)
          throw InconsistencyError(
              "threshold power is in the ideal slice; contradicts the point");
      });
    }
  }
  return out;
}

std::uint32_t edge_bit_count(std::uint32_t n) { return n * (n - 1) / 2; }

// One-line graph description for violation messages.
std::string graph_summary(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.n << " edges={";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) s << ",";
    s << g.edges[i].first << "-" << g.edges[i].second;
  }
  s << "}";
  return s.str();
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& opts, const Config& cfg) {
  if (opts.k < 3) throw StructuralError("k must be >= 3");
  if (opts.nmax < 1 || opts.nmax > 5)
    throw StructuralError("nmax must be between 1 and 5");
  if (opts.sample > 700)
    throw StructuralError(
        "sample must be <= 700 (distinct connected graphs on 5 vertices)");

  struct Row {
    Graph g;
    std::string origin;  // "exhaustive", "explicit", "random"
    InstanceOutcome res;
  };
  std::vector<Row> rows;

  for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(opts.nmax, 4); ++n) {
    const std::uint64_t total = 1ull << edge_bit_count(n);
    for (std::uint64_t bits = 0; bits < total; ++bits)
      rows.push_back({Graph::from_edge_bits(n, bits), "exhaustive", {}});
  }
  if (opts.nmax >= 5) {
    std::set<std::uint64_t> seen;
    auto add5 = [&](const Graph& g, const char* origin) {
      if (seen.insert(g.to_edge_bits()).second)
        rows.push_back({g, origin, {}});
    };
    add5(Graph::from_edges(5, {}), "explicit");  // edgeless: isolated-vertex path
    add5(Graph::cycle(5), "explicit");      // odd cycle, 3-colorable
    add5(Graph::complete(5), "explicit");   // K5, not 3-colorable
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t mask = (1ull << edge_bit_count(5)) - 1;
    std::uint32_t found = 0;
    std::uint64_t draws = 0;
    while (found < opts.sample) {
      if (++draws > 4000000)
        throw InconsistencyError("sampling failed to find enough graphs");
      const std::uint64_t bits = rng() & mask;
      const Graph g = Graph::from_edge_bits(5, bits);
      if (!g.connected() || seen.count(bits)) continue;
      seen.insert(bits);
      rows.push_back({g, "random", {}});
      ++found;
    }
  }

  VerifyOutcome out;
  out.instances = rows.size();
  for (Row& row : rows) {
    row.res = check_instance(row.g, opts.k, cfg);
    if (row.res.elliptic) ++out.elliptic_count;
    if (row.res.colorable) ++out.colorable_count;
    for (const std::string& f : row.res.failures)
      out.violations.push_back(graph_summary(row.g) + " -- " + f);
  }
  out.passed = out.violations.empty();

  // Deterministic report (no timings).
  Json report;
  report["command"] = "verify";
  report["k"] = opts.k;
  report["nmax"] = opts.nmax;
  report["sample"] = opts.sample;
  report["seed"] = opts.seed;
  Json caps;
  caps["max_slice_dim"] = cfg.max_slice_dim;
  caps["max_degree"] = cfg.max_degree;
  report["caps"] = std::move(caps);

  std::map<std::uint32_t, std::array<std::uint64_t, 4>> per_n;  // cnt, ell, col, fail
  Json instances = Json::array();
  for (const Row& row : rows) {
    Json r;
    r["n"] = row.g.n;
    r["edges"] = graph_to_json(row.g)["edges"];
    r["origin"] = row.origin;
    r["connected"] = row.res.connected;
    r["colorable"] = row.res.colorable;
    r["elliptic"] = row.res.elliptic;
    r["d_graph"] = row.res.d_graph;
    r["checks"] = row.res.checks;
    if (!row.res.failures.empty()) r["failures"] = row.res.failures;
    instances.push_back(std::move(r));
    auto& agg = per_n[row.g.n];
    agg[0] += 1;
    agg[1] += row.res.elliptic ? 1 : 0;
    agg[2] += row.res.colorable ? 1 : 0;
    agg[3] += row.res.failures.empty() ? 0 : 1;
  }
  report["instances"] = std::move(instances);
  Json summary;
  summary["total"] = out.instances;
  summary["elliptic"] = out.elliptic_count;
  summary["colorable"] = out.colorable_count;
  summary["violations"] = out.violations;
  report["summary"] = std::move(summary);
  report["passed"] = out.passed;
  out.report = std::move(report);

  std::ostringstream text;
  text << "verify k=" << opts.k << " nmax=" << opts.nmax
       << " sample=" << opts.sample << " seed=" << opts.seed << "\n";
  for (const auto& [n, agg] : per_n)
    text << "n=" << n << " graphs=" << agg[0] << " elliptic=" << agg[1]
         << " colorable=" << agg[2] << " failures=" << agg[3] << "\n";
  for (const std::string& v : out.violations) text << "VIOLATION " << v << "\n";
  text << "RESULT " << (out.passed ? "PASS" : "FAIL")
       << " (instances=" << out.instances
       << ", violations=" << out.violations.size() << ")\n";
  out.text = text.str();
  return out;
}

}  // namespace ehk
