#pragma once

// JSON report builders shared by the CLI and the verification harness.
// Reports are deterministic: ordered keys, exact rational strings, no
// wall-clock data.

#include "json.hpp"

#include "ehk/config.hpp"
#include "ehk/ellipticity.hpp"
#include "ehk/graph.hpp"
#include "ehk/invariants.hpp"
#include "ehk/model.hpp"
#include "ehk/reduction.hpp"

namespace ehk {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Json constants_to_json(const ReductionConstants& c);
Json extnat_to_json(const ExtNat& v);
Json point_to_json(const EvaluationPoint& p);
Json validation_to_json(const ValidationReport& v);

const char* method_name(Method m);
Method method_from_name(const std::string& name);  // throws ParseError

// Serializes a sparse functional on the even-subalgebra slice of `degree`
// as monomial/coefficient pairs.
Json functional_to_json(const SullivanModel& model, std::uint32_t degree,
                        const SparseVec& phi, const Config& cfg);

// Full verdict with certificates; `vertex_edge` is the model the witnesses
// live in.
Json verdict_to_json(const EllipticityVerdict& v, const SullivanModel& vertex_edge,
                     const Config& cfg);

Json graph_report_to_json(const GraphInvariantReport& rep, const Graph& g,
                          const Config& cfg);
Json model_report_to_json(const ModelInvariantReport& rep,
                          const SullivanModel& model);

}  // namespace ehk
