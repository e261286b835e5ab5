#pragma once

// JSON serialization for Sullivan models.
//
// Document layout (all coefficients exact rational strings, never floats):
//
//   {
//     "format": "ehk-model",
//     "version": 1,
//     "name": "...",                     // optional
//     "generators": [{"name": "x1", "degree": 2, "parity": "even"}, ...],
//     "differentials": {
//       "x1": [],
//       "y1_2": [{"coeff": "1", "even": {"x1": 2}, "odd": []}, ...]
//     },
//     "provenance": {...}                // optional, carried verbatim
//   }
//
// Emission is canonical: generators in id order, every generator listed under
// "differentials", terms in the canonical monomial order, exponent maps and
// odd lists in id order.  parse(emit(m)) == m exactly.

#include <string>

#include "json.hpp"

#include "ehk/model.hpp"

namespace ehk {

using Json = nlohmann::ordered_json;

// One polynomial as a list of {"coeff", "even", "odd"} terms.
Json poly_to_json(const Poly& p, GeneratorTable gens);
Poly poly_from_json(const Json& terms, GeneratorTable gens);

Json model_to_json(const SullivanModel& model, const std::string& name = "",
                   const Json& provenance = Json());

struct ModelDocument {
  SullivanModel model;
  std::string name;  // empty when absent
  Json provenance;   // null when absent
};

// Throws ParseError on malformed documents.  Structural soundness of the
// model itself (d^2 = 0 and friends) is deliberately not enforced here;
// callers run validate() and report.
ModelDocument model_from_json(const Json& doc);

ModelDocument read_model_file(const std::string& path);
void write_model_file(const std::string& path, const SullivanModel& model,
                      const std::string& name = "",
                      const Json& provenance = Json());

}  // namespace ehk
