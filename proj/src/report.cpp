#include "ehk/report.hpp"

#include "ehk/errors.hpp"
#include "ehk/model_io.hpp"
#include "ehk/rational.hpp"
#include "ehk/slice.hpp"

namespace ehk {

Json graph_to_json(const Graph& g) {
  Json out;
  out["n"] = g.n;
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(Json::array({i, j}));
  out["edges"] = std::move(edges);
  return out;
}

Json constants_to_json(const ReductionConstants& c) {
  Json out;
  out["n"] = c.n;
  out["k"] = c.k;
  out["d_graph"] = c.d_graph;
  out["d_family"] = c.d_family;
  out["z_degree"] = c.z_degree;
  out["z_power"] = c.z_power;
  return out;
}

Json extnat_to_json(const ExtNat& v) {
  Json out;
  switch (v.kind) {
    case ExtNat::Kind::exact:
      out["kind"] = "exact";
      out["value"] = v.value;
      break;
    case ExtNat::Kind::infinite:
      out["kind"] = "infinite";
      break;
    case ExtNat::Kind::lower_bound:
      out["kind"] = "lower_bound";
      out["value"] = v.value;
      break;
    case ExtNat::Kind::not_computed:
      out["kind"] = "not_computed";
      break;
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json point_to_json(const EvaluationPoint& p) {
  Json out;
  out["root_order"] = p.order;
  Json values = Json::array();
  for (const auto& e : p.exponents) {
    if (e.has_value())
      values.push_back("zeta^" + std::to_string(*e));
    else
      values.push_back("0");
  }
  out["values"] = std::move(values);
  out["note"] =
      "zeta is a primitive root of unity of the stated order; substituting "
      "these values for the degree-2 generators kills every edge polynomial";
  return out;
}

Json validation_to_json(const ValidationReport& v) {
  Json out;
  out["well_formed"] = v.well_formed;
  out["homogeneous"] = v.homogeneous;
  out["d_squared_zero"] = v.d_squared_zero;
  out["minimal"] = v.minimal;
  out["pure"] = v.pure;
  out["simply_connected"] = v.simply_connected;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::algebraic:
      return "nilpotence";
    case Method::coloring:
      return "coloring";
    case Method::both:
      return "both";
  }
  return "both";
}

Method method_from_name(const std::string& name) {
  if (name == "nilpotence") return Method::algebraic;
  if (name == "coloring") return Method::coloring;
  if (name == "both") return Method::both;
  throw ParseError("unknown method '" + name +
                   "' (expected nilpotence, coloring, or both)");
}

Json functional_to_json(const SullivanModel& model, std::uint32_t degree,
                        const SparseVec& phi, const Config& cfg) {
  const DegreeSlice slice =
      enumerate_basis(model, degree, SliceSpan::even_subalgebra, cfg);
  Json entries = Json::array();
  for (const auto& [idx, coeff] : phi) {
    Json e;
    e["monomial"] = monomial_to_string(slice.basis[idx], model.table());
    e["coeff"] = rational_to_string(coeff);
    entries.push_back(std::move(e));
  }
  Json out;
  out["degree"] = degree;
  out["entries"] = std::move(entries);
  out["note"] =
      "linear functional on the even-subalgebra slice that vanishes on the "
      "ideal generated by the edge differentials but not on the tested power";
  return out;
}

Json verdict_to_json(const EllipticityVerdict& v,
                     const SullivanModel& vertex_edge, const Config& cfg) {
  Json out;
  out["elliptic"] = v.elliptic;
  out["method"] = method_name(v.method);
  out["tested_power"] = v.tested_power;
  if (!v.witnesses.empty()) {
    Json ws = Json::array();
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      Json w;
      w["vertex"] = static_cast<std::uint32_t>(i + 1);
      w["witness"] = poly_to_json(v.witnesses[i], vertex_edge.table());
      ws.push_back(std::move(w));
    }
    out["witnesses"] = std::move(ws);
    out["witness_note"] =
        "d(witness) equals the tested power of the vertex generator";
  }
  if (v.witness_vertex.has_value()) out["witness_vertex"] = *v.witness_vertex;
  if (!v.functional.empty()) {
    Json f = functional_to_json(vertex_edge, v.functional_degree, v.functional, cfg);
    if (v.functional_vertex.has_value()) f["vertex"] = *v.functional_vertex;
    out["functional"] = std::move(f);
  }
  if (v.colorable_component.has_value())
    out["colorable_component"] = *v.colorable_component;
  if (v.component_coloring.has_value()) {
    out["component_coloring"] = *v.component_coloring;
    out["coloring_note"] = "colors are 0-based and indexed by component vertex";
  }
  if (v.point.has_value()) out["evaluation_point"] = point_to_json(*v.point);
  if (v.exhaustive_coloring_search)
    out["exhaustive_coloring_search"] = true;
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

Json graph_report_to_json(const GraphInvariantReport& rep, const Graph& g,
                          const Config& cfg) {
  const SullivanModel vertex_edge = build_vertex_edge_model(g, rep.k);
  Json out;
  out["graph"] = graph_to_json(g);
  out["k"] = rep.k;
  out["constants"] = constants_to_json(rep.constants);
  out["connected"] = rep.connected;
  out["ellipticity"] = verdict_to_json(rep.ellipticity, vertex_edge, cfg);
  out["formal_dim_vertex_edge"] = rep.formal_dim_vertex_edge;
  out["formal_dim_stabilized"] = rep.formal_dim_stabilized;
  if (rep.betti.has_value()) out["betti"] = *rep.betti;
  Json ve;
  ve["cup_length"] = extnat_to_json(rep.cup_length);
  ve["toomer"] = extnat_to_json(rep.toomer);
  ve["category"] = extnat_to_json(rep.category);
  out["vertex_edge_invariants"] = std::move(ve);
  Json st;
  st["cup_length"] = extnat_to_json(rep.cup_length_stab);
  st["toomer"] = extnat_to_json(rep.toomer_stab);
  st["category"] = extnat_to_json(rep.category_stab);
  out["stabilized_invariants"] = std::move(st);
  out["threshold"] = rep.constants.d_family + static_cast<std::int64_t>(g.n);
  if (rep.cup_within_threshold.has_value())
    out["cup_length_within_threshold"] = *rep.cup_within_threshold;
  if (rep.category_within_threshold.has_value())
    out["category_within_threshold"] = *rep.category_within_threshold;
  out["toomer_definition"] = "fundamental_class";
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  return out;
}

Json model_report_to_json(const ModelInvariantReport& rep,
                          const SullivanModel& model) {
  Json out;
  out["generators"] = static_cast<std::uint64_t>(model.gens.size());
  out["validation"] = validation_to_json(rep.validation);
  out["invariants_computed"] = rep.invariants_computed;
  if (rep.invariants_computed) {
    out["formal_dim"] = rep.formal_dim;
    if (rep.elliptic.has_value()) out["elliptic"] = *rep.elliptic;
    if (rep.nonnilpotent_generator.has_value())
      out["nonnilpotent_generator"] = *rep.nonnilpotent_generator;
    if (rep.betti.has_value()) out["betti"] = *rep.betti;
    out["cup_length"] = extnat_to_json(rep.cup_length);
    out["toomer"] = extnat_to_json(rep.toomer);
    out["category"] = extnat_to_json(rep.category);
    out["toomer_definition"] = "fundamental_class";
  }
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  return out;
}

}  // namespace ehk
