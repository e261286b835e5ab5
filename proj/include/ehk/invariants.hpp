#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehk/cohomology.hpp"
#include "ehk/config.hpp"
#include "ehk/ellipticity.hpp"
#include "ehk/graph.hpp"
#include "ehk/model.hpp"
#include "ehk/reduction.hpp"

namespace ehk {

// A homotopy invariant value: an exact natural number, infinity, a certified
// lower bound (with the certificate described in `note`), or not computed
// (with the reason in `note`).
struct ExtNat {
  enum class Kind : std::uint8_t { exact, infinite, lower_bound, not_computed };
  Kind kind = Kind::not_computed;
  std::int64_t value = 0;
  std::string note;

  static ExtNat exact(std::int64_t v, std::string note = "");
  static ExtNat infinite(std::string note);
  static ExtNat lower_bound(std::int64_t v, std::string note);
  static ExtNat not_computed(std::string note);
  bool is_exact() const { return kind == Kind::exact; }
  std::string render() const;  // "3", "inf", ">= 21", "n/a"
};

// --- invariants of an elliptic pure model, via its cohomology -------------

// Largest t with a nonzero product of t positive-degree classes; exact.
// H must vanish above `fd` (true for elliptic models), which bounds the
// search.
std::int64_t cup_length_elliptic(CohomologyEngine& engine, std::int64_t fd);

// Least m >= 0 such that the fundamental class in degree fd stays nonzero
// after dividing out im(d) plus all monomials of word length > m.  Requires
// dim H^fd = 1 (InconsistencyError otherwise).
std::int64_t toomer_elliptic(CohomologyEngine& engine, std::int64_t fd);

// --- graph pipeline ---------------------------------------------------------

struct GraphInvariantOptions {
  // Compute the Betti vector and exact cup/Toomer/category values (requires
  // running cohomology up to the formal dimension). Without it the report
  // carries ellipticity, formal dimensions, and threshold answers only.
  bool full = false;
};

struct GraphInvariantReport {
  std::uint32_t k = 0;
  ReductionConstants constants;
  bool connected = true;
  EllipticityVerdict ellipticity;

  std::int64_t formal_dim_vertex_edge = 0;
  std::int64_t formal_dim_stabilized = 0;

  std::optional<std::vector<std::int64_t>> betti;  // vertex-edge model, 0..fd

  ExtNat cup_length, toomer, category;             // vertex-edge model
  ExtNat cup_length_stab, toomer_stab, category_stab;  // stabilized model

  // Threshold questions: cup(stabilized) <= d_family + n, and the same for
  // category.  Answerable for every instance (the elliptic side through the
  // verified splitting and the dimension bound, the non-elliptic side
  // through the non-exactness certificate).
  std::optional<bool> cup_within_threshold;
  std::optional<bool> category_within_threshold;

  std::vector<std::string> notes;
};

GraphInvariantReport graph_invariants(const Graph& g, std::uint32_t k,
                                      const Config& cfg,
                                      const GraphInvariantOptions& opts);

// --- hand-written pure models ----------------------------------------------

struct ModelInvariantReport {
  ValidationReport validation;
  bool invariants_computed = false;  // requires valid + pure + simply conn.
  std::int64_t formal_dim = 0;
  std::optional<bool> elliptic;
  std::optional<std::string> nonnilpotent_generator;
  std::optional<std::vector<std::int64_t>> betti;
  ExtNat cup_length, toomer, category;
  std::vector<std::string> notes;
};

// Ellipticity of an eligible (well-formed, homogeneous, d^2 = 0, pure,
// simply connected) model: every even generator x must have x^N in the ideal
// slice of the odd differentials at N = max(1, floor(fd/deg x) + 1); a
// failure exhibits a nonzero class above the formal dimension.
struct ModelEllipticity {
  bool elliptic = false;
  std::optional<std::string> nonnilpotent_generator;
  std::uint32_t tested_power = 0;  // exponent used for the reported generator
};
ModelEllipticity model_ellipticity(const SullivanModel& model,
                                   const Config& cfg);

// Validates, decides ellipticity via model_ellipticity, and on elliptic
// models computes Betti numbers and exact invariants.
ModelInvariantReport model_invariants(const SullivanModel& model,
                                      const Config& cfg);

}  // namespace ehk
