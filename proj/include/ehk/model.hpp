#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehk/generator.hpp"
#include "ehk/polynomial.hpp"

namespace ehk {

// A finitely generated Sullivan algebra (LambdaV, d): free graded-commutative
// on `gens`, with d given on generators and extended as a degree +1 derivation
// d(uv) = (du)v + (-1)^{deg u} u (dv).
struct SullivanModel {
  std::vector<Generator> gens;
  // diff[i] = d(generator i); the zero polynomial for closed generators.
  std::vector<Poly> diff;

  GeneratorTable table() const { return GeneratorTable(gens); }
  std::vector<std::uint32_t> even_ids() const;
  std::vector<std::uint32_t> odd_ids() const;
  std::optional<std::uint32_t> find_generator(const std::string& name) const;
};

// Witness data that a model is pure: differentials vanish on even generators
// and land in the even subalgebra on odd ones.
struct PurityCertificate {
  std::vector<std::uint32_t> even_ids;
  std::vector<std::uint32_t> odd_ids;
};

// Outcome of structural validation.  Flags are independent; downstream
// routines state which ones they require.  `detail` carries a human-readable
// description of the first failure per flag.
struct ValidationReport {
  bool well_formed = false;        // diff size matches, ids in range, ...
  bool homogeneous = false;        // deg d(v) == deg v + 1 for all generators
  bool d_squared_zero = false;     // d(d v) == 0 for all generators
  bool minimal = false;            // every d(v) has word length >= 2
  bool pure = false;               // see PurityCertificate
  bool simply_connected = false;   // no generator of degree 1
  std::optional<PurityCertificate> purity;
  std::vector<std::string> detail;

  // The conjunction a freshly constructed model is expected to satisfy.
  bool all() const {
    return well_formed && homogeneous && d_squared_zero && minimal && pure &&
           simply_connected;
  }
};

ValidationReport validate(const SullivanModel& model);

// d extended to polynomials.  Linear in the coefficients; on a monomial
// g1...gr it is the signed Leibniz sum over factors.
Poly apply_differential(const SullivanModel& model, const Poly& p);

// Formal dimension of a pure model:
//   sum_{odd gens} deg  -  sum_{even gens} (deg - 1).
// This is the degree carrying the fundamental class when the model is
// elliptic; the value itself is defined (and computed) for every pure model.
std::int64_t formal_dimension(const SullivanModel& model);

}  // namespace ehk
