// ehk: ellipticity and homotopy invariants of pure Sullivan models built
// from graph-coloring instances.
//
// Subcommands:
//   reduce      build the vertex-edge or stabilized model for a graph
//   decide      elliptic or not (exit 0 / 10), with verified certificates
//   invariants  formal dimension, Betti numbers, cup length, Toomer
//               invariant, LS category, threshold answers
//   verify      sweep graphs and cross-check every claim (exit 0 / 1)
//
// Exit codes: 0 success (decide: elliptic), 10 not elliptic, 20 capacity
// cap exceeded, 1 error or verification violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ehk/config.hpp"
#include "ehk/errors.hpp"
#include "ehk/graph.hpp"
#include "ehk/invariants.hpp"
#include "ehk/model_io.hpp"
#include "ehk/report.hpp"
#include "ehk/verify.hpp"

namespace {

using ehk::Json;

constexpr int kExitOk = 0;
constexpr int kExitNotElliptic = 10;
constexpr int kExitCapacity = 20;
constexpr int kExitError = 1;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ehk::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ehk::ParseError("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

ehk::Graph load_graph(const std::string& path) {
  return ehk::Graph::parse_dimacs(slurp(path));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// An eligible model for the invariant engine; exits with a diagnostic
// otherwise.
ehk::SullivanModel load_eligible_model(const std::string& path) {
  ehk::ModelDocument doc = ehk::read_model_file(path);
  const ehk::ValidationReport val = ehk::validate(doc.model);
  if (!(val.well_formed && val.homogeneous && val.d_squared_zero && val.pure &&
        val.simply_connected))
    throw ehk::ParseError("model in '" + path +
                          "' is not eligible (needs well-formed, homogeneous, "
                          "d^2=0, pure, simply connected): " +
                          join(val.detail, "; "));
  return std::move(doc.model);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_extnat(const char* label, const ehk::ExtNat& v) {
  std::cout << "  " << label << ": " << v.render();
  if (!v.note.empty()) std::cout << "    (" << v.note << ")";
  std::cout << "\n";
}

int cmd_reduce(const std::string& graph_path, std::uint32_t k,
               const std::string& target, const std::string& out_path) {
  const ehk::Graph g = load_graph(graph_path);
  const ehk::ReductionConstants c = ehk::reduction_constants(g, k);
  const bool stabilized = target == "W";
  const ehk::SullivanModel model = stabilized
                                       ? ehk::build_stabilized_model(g, k)
                                       : ehk::build_vertex_edge_model(g, k);
  Json provenance;
  provenance["kind"] = "graph_reduction";
  provenance["variant"] = stabilized ? "stabilized" : "vertex_edge";
  provenance["k"] = k;
  provenance["graph"] = ehk::graph_to_json(g);
  provenance["constants"] = ehk::constants_to_json(c);
  const std::string name =
      std::string(stabilized ? "stabilized" : "vertex-edge") + " model (n=" +
      std::to_string(g.n) + ", k=" + std::to_string(k) + ")";
  ehk::write_model_file(out_path, model, name, provenance);
  std::cout << "wrote " << out_path << ": " << model.gens.size()
            << " generators (" << g.n << " vertices, " << g.edges.size()
            << " edges" << (stabilized ? ", " + std::to_string(g.n) + " stabilizers" : "")
            << "), d_graph=" << c.d_graph << ", d_family=" << c.d_family
            << ", z_degree=" << c.z_degree << ", z_power=" << c.z_power << "\n";
  return kExitOk;
}

int cmd_decide_graph(const std::string& graph_path, std::uint32_t k,
                     const std::string& method_name,
                     const std::string& out_path, const ehk::Config& cfg) {
  const ehk::Graph g = load_graph(graph_path);
  const ehk::Method method = ehk::method_from_name(method_name);
  const ehk::EllipticityVerdict v = ehk::is_elliptic(g, k, method, cfg);

  std::cout << "graph: n=" << g.n << ", edges=" << g.edges.size()
            << ", k=" << k << ", method=" << ehk::method_name(v.method) << "\n";
  std::cout << "verdict: " << (v.elliptic ? "elliptic" : "not elliptic") << "\n";
  if (v.elliptic && !v.witnesses.empty())
    std::cout << "  every [x_v] is nilpotent at exponent " << v.tested_power
              << " (witnesses verified by differentiation)\n";
  if (v.elliptic && v.exhaustive_coloring_search)
    std::cout << "  no component is " << k
              << "-colorable (exhaustive search)\n";
  for (const std::string& n : v.notes) std::cout << "  " << n << "\n";

  if (!out_path.empty()) {
    const ehk::SullivanModel model = ehk::build_vertex_edge_model(g, k);
    Json report;
    report["command"] = "decide";
    report["graph"] = ehk::graph_to_json(g);
    report["k"] = k;
    report["verdict"] = ehk::verdict_to_json(v, model, cfg);
    write_json(out_path, report);
  }
  return v.elliptic ? kExitOk : kExitNotElliptic;
}

int cmd_decide_model(const std::string& model_path,
                     const std::string& method_name,
                     const std::string& out_path, const ehk::Config& cfg) {
  if (method_name != "both" && method_name != "nilpotence")
    throw ehk::ParseError("the coloring method needs --graph");
  const ehk::SullivanModel model = load_eligible_model(model_path);
  const ehk::ModelEllipticity ell = ehk::model_ellipticity(model, cfg);

  std::cout << "model: " << model.gens.size() << " generators, method=nilpotence\n";
  std::cout << "verdict: " << (ell.elliptic ? "elliptic" : "not elliptic") << "\n";
  if (!ell.elliptic)
    std::cout << "  [" << *ell.nonnilpotent_generator << "]^"
              << ell.tested_power
              << " != 0 lives above the formal dimension\n";

  if (!out_path.empty()) {
    Json report;
    report["command"] = "decide";
    report["model_generators"] = static_cast<std::uint64_t>(model.gens.size());
    report["method"] = "nilpotence";
    report["elliptic"] = ell.elliptic;
    if (!ell.elliptic) {
      report["nonnilpotent_generator"] = *ell.nonnilpotent_generator;
      report["tested_power"] = ell.tested_power;
    }
    write_json(out_path, report);
  }
  return ell.elliptic ? kExitOk : kExitNotElliptic;
}

int cmd_invariants_graph(const std::string& graph_path, std::uint32_t k,
                         bool full, const std::string& out_path,
                         const ehk::Config& cfg) {
  const ehk::Graph g = load_graph(graph_path);
  ehk::GraphInvariantOptions opts;
  opts.full = full;
  const ehk::GraphInvariantReport rep = ehk::graph_invariants(g, k, cfg, opts);

  std::cout << "graph: n=" << g.n << ", edges=" << g.edges.size() << ", k=" << k
            << "\n";
  std::cout << "elliptic: " << yesno(rep.ellipticity.elliptic) << "\n";
  std::cout << "formal dimension: vertex-edge " << rep.formal_dim_vertex_edge
            << ", stabilized " << rep.formal_dim_stabilized << "\n";
  if (rep.betti.has_value()) {
    std::cout << "betti (vertex-edge, 0.." << rep.formal_dim_vertex_edge
              << "): [";
    for (std::size_t i = 0; i < rep.betti->size(); ++i)
      std::cout << (i ? "," : "") << (*rep.betti)[i];
    std::cout << "]\n";
  }
  std::cout << "vertex-edge model:\n";
  print_extnat("cup length", rep.cup_length);
  print_extnat("Toomer invariant (fundamental-class form)", rep.toomer);
  print_extnat("LS category", rep.category);
  std::cout << "stabilized model:\n";
  print_extnat("cup length", rep.cup_length_stab);
  print_extnat("Toomer invariant (fundamental-class form)", rep.toomer_stab);
  print_extnat("LS category", rep.category_stab);
  const std::int64_t threshold =
      rep.constants.d_family + static_cast<std::int64_t>(g.n);
  if (rep.cup_within_threshold.has_value())
    std::cout << "stabilized cup length <= " << threshold << ": "
              << yesno(*rep.cup_within_threshold) << "\n";
  if (rep.category_within_threshold.has_value())
    std::cout << "stabilized category <= " << threshold << ": "
              << yesno(*rep.category_within_threshold) << "\n";
  for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";

  if (!out_path.empty()) {
    Json report = ehk::graph_report_to_json(rep, g, cfg);
    report["command"] = "invariants";
    write_json(out_path, report);
  }
  return kExitOk;
}

int cmd_invariants_model(const std::string& model_path,
                         const std::string& out_path, const ehk::Config& cfg) {
  ehk::ModelDocument doc = ehk::read_model_file(model_path);
  const ehk::ModelInvariantReport rep = ehk::model_invariants(doc.model, cfg);

  std::cout << "model: " << doc.model.gens.size() << " generators";
  if (!doc.name.empty()) std::cout << " (" << doc.name << ")";
  std::cout << "\n";
  if (!rep.invariants_computed) {
    std::cout << "invariants not computed; validation: "
              << join(rep.validation.detail, "; ") << "\n";
    for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";
    if (!out_path.empty())
      write_json(out_path, ehk::model_report_to_json(rep, doc.model));
    return kExitError;
  }
  std::cout << "formal dimension: " << rep.formal_dim << "\n";
  if (rep.elliptic.has_value())
    std::cout << "elliptic: " << yesno(*rep.elliptic) << "\n";
  if (rep.betti.has_value()) {
    std::cout << "betti (0.." << rep.formal_dim << "): [";
    for (std::size_t i = 0; i < rep.betti->size(); ++i)
      std::cout << (i ? "," : "") << (*rep.betti)[i];
    std::cout << "]\n";
  }
  print_extnat("cup length", rep.cup_length);
  print_extnat("Toomer invariant (fundamental-class form)", rep.toomer);
  print_extnat("LS category", rep.category);
  for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";

  if (!out_path.empty())
    write_json(out_path, ehk::model_report_to_json(rep, doc.model));
  return kExitOk;
}

int cmd_verify(const ehk::VerifyOptions& opts, const std::string& out_path,
               const ehk::Config& cfg) {
  const ehk::VerifyOutcome outcome = ehk::run_verify(opts, cfg);
  std::cout << outcome.text;
  if (!out_path.empty()) write_json(out_path, outcome.report);
  return outcome.passed ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ellipticity and homotopy invariants of pure Sullivan models from "
      "graph-coloring instances"};
  app.require_subcommand(1);

  std::int64_t max_slice_dim = -1;
  std::int64_t max_degree = -1;
  app.add_option("--max-slice-dim", max_slice_dim,
                 "cap on degree-slice dimensions (default from "
                 "EHK_MAX_SLICE_DIM or 200000)");
  app.add_option("--max-degree", max_degree,
                 "cap on slice degrees (default from EHK_MAX_DEGREE or 64)");

  std::string graph_path, model_path, out_path;
  std::uint32_t k = 3;
  std::string target = "V";
  std::string method = "both";
  bool full = false;
  ehk::VerifyOptions vopts;

  CLI::App* reduce = app.add_subcommand(
      "reduce", "build the model for a DIMACS graph and write it as JSON");
  // Let the capacity flags appear after the subcommand name as well.
  reduce->fallthrough();
  reduce->add_option("--graph", graph_path, "DIMACS .col file")->required();
  reduce->add_option("--k", k, "number of colors (>= 3)");
  reduce
      ->add_option("--target", target,
                   "V = vertex-edge model, W = stabilized model")
      ->check(CLI::IsMember({"V", "W"}));
  reduce->add_option("--out", out_path, "output model JSON path")->required();

  CLI::App* decide = app.add_subcommand(
      "decide", "decide ellipticity (exit 0 = elliptic, 10 = not elliptic)");
  decide->fallthrough();
  decide->add_option("--graph", graph_path, "DIMACS .col file");
  decide->add_option("--model", model_path, "model JSON file");
  decide->add_option("--k", k, "number of colors (graph input, >= 3)");
  decide
      ->add_option("--method", method,
                   "nilpotence = ideal-slice membership, coloring = "
                   "per-component search, both = run and compare")
      ->check(CLI::IsMember({"nilpotence", "coloring", "both"}));
  decide->add_option("--out", out_path, "write the JSON report here");

  CLI::App* invariants = app.add_subcommand(
      "invariants", "formal dimension, Betti numbers, cup length, Toomer "
                    "invariant, category, threshold answers");
  invariants->fallthrough();
  invariants->add_option("--graph", graph_path, "DIMACS .col file");
  invariants->add_option("--model", model_path, "model JSON file");
  invariants->add_option("--k", k, "number of colors (graph input, >= 3)");
  invariants->add_flag("--full", full,
                       "also compute Betti numbers and exact invariant values");
  invariants->add_option("--out", out_path, "write the JSON report here");

  CLI::App* verify = app.add_subcommand(
      "verify", "sweep graphs, decide by both methods, re-validate all "
                "certificates (exit 0 = pass)");
  verify->fallthrough();
  verify->add_option("--nmax", vopts.nmax, "exhaustive up to n=min(nmax,4); "
                                           "nmax=5 adds sampled graphs");
  verify->add_option("--k", vopts.k, "number of colors (>= 3)");
  verify->add_option("--sample", vopts.sample,
                     "number of random distinct connected graphs at n=5");
  verify->add_option("--seed", vopts.seed, "sampling seed");
  verify->add_option("--out", out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's own exit codes into this tool's contract: 0 for
    // --help and friends, 1 for every usage error.
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    ehk::Config cfg = ehk::Config::from_env();
    if (max_slice_dim >= 0)
      cfg.max_slice_dim = static_cast<std::size_t>(max_slice_dim);
    if (max_degree >= 0) cfg.max_degree = static_cast<std::uint32_t>(max_degree);

    if (reduce->parsed()) return cmd_reduce(graph_path, k, target, out_path);
    if (decide->parsed()) {
      if (graph_path.empty() == model_path.empty())
        throw ehk::ParseError("decide needs exactly one of --graph / --model");
      return graph_path.empty()
                 ? cmd_decide_model(model_path, method, out_path, cfg)
                 : cmd_decide_graph(graph_path, k, method, out_path, cfg);
    }
    if (invariants->parsed()) {
      if (graph_path.empty() == model_path.empty())
        throw ehk::ParseError(
            "invariants needs exactly one of --graph / --model");
      return graph_path.empty()
                 ? cmd_invariants_model(model_path, out_path, cfg)
                 : cmd_invariants_graph(graph_path, k, full, out_path, cfg);
    }
    if (verify->parsed()) return cmd_verify(vopts, out_path, cfg);
  } catch (const ehk::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
