#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ehk/generator.hpp"

namespace ehk {

// A monomial in a free graded-commutative algebra, stored in normal form:
// even generators as (id, exponent > 0) pairs with strictly ascending ids,
// odd generators as a strictly ascending id list (squares of odd generators
// are zero and never stored).  The total degree is fixed at construction.
//
// Normal form makes equality structural and lets products work by merging,
// counting transpositions of odd factors for the Koszul sign.
struct Monomial {
  std::uint32_t degree = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> even;
  std::vector<std::uint32_t> odd;

  bool operator==(const Monomial& other) const {
    return degree == other.degree && even == other.even && odd == other.odd;
  }
  bool is_unit() const { return even.empty() && odd.empty(); }

  // Sum of even exponents plus the number of odd factors.
  std::uint32_t word_length() const;

  // Exponent of generator `id` (0 or 1 for odd ids).
  std::uint32_t exponent_of(std::uint32_t id) const;
};

// Builds a monomial in normal form, computing its degree from `gens`.
// `even_part` pairs may arrive unsorted but ids must be distinct; `odd_part`
// ids must be distinct.  Throws StructuralError on ids outside the table,
// parity mismatches, zero exponents, or repeated odd ids.
Monomial make_monomial(
    GeneratorTable gens,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> even_part,
    std::vector<std::uint32_t> odd_part);

// x_id^e as a monomial (e >= 1, id even in `gens`).
Monomial even_power(GeneratorTable gens, std::uint32_t id, std::uint32_t e);

// The unit monomial (degree 0).
inline Monomial unit_monomial() { return Monomial{}; }

// Graded-commutative product.  Returns nullopt when the product vanishes
// (shared odd factor); otherwise the normal-form product and the Koszul sign
// (+1 or -1) from the number of odd-factor transpositions in the merge.
// Throws StructuralError if an id occurs with even role on one side and odd
// role on the other (two different generator universes were mixed).
std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a,
                                                     const Monomial& b);

// Canonical order used everywhere a slice basis is listed: by total degree,
// then by exponent vectors compared at the smallest id where they differ,
// larger exponent first.  In degree 4 over x1, x2 this lists
// x1^2, x1 x2, x2^2.
bool monomial_less(const Monomial& a, const Monomial& b);

// Rendering for reports and model documents, e.g. "x1^2*y1_2" with `gens`
// supplying the names; "1" for the unit.
std::string monomial_to_string(const Monomial& m, GeneratorTable gens);

}  // namespace ehk
