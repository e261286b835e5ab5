#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ehk/config.hpp"
#include "ehk/model.hpp"
#include "ehk/monomial.hpp"
#include "ehk/polynomial.hpp"
#include "ehk/rational.hpp"

namespace ehk {

// Which generators span the slice.
enum class SliceSpan : std::uint8_t { full, even_subalgebra };

// The monomial basis of one homogeneous degree of a model (or of its even
// subalgebra), listed in canonical monomial order.  Coordinates of
// homogeneous polynomials are taken against this list.
struct DegreeSlice {
  std::uint32_t degree = 0;
  SliceSpan span = SliceSpan::full;
  std::vector<Monomial> basis;

  std::size_t dim() const { return basis.size(); }
  // Binary search in canonical order; nullopt when m is not in the slice.
  std::optional<std::uint32_t> find(const Monomial& m) const;
};

// Number of basis monomials in the given degree, without enumerating them.
// Saturates at cap+1 (callers compare against their cap).
std::uint64_t count_basis(const SullivanModel& model, std::uint32_t degree,
                          SliceSpan span, std::uint64_t cap);

// Enumerates the basis.  Throws CapacityError if degree exceeds
// cfg.max_degree or the dimension would exceed cfg.max_slice_dim; it never
// silently truncates.
DegreeSlice enumerate_basis(const SullivanModel& model, std::uint32_t degree,
                            SliceSpan span, const Config& cfg);

// Sparse coordinates: (index into slice.basis, coefficient), index-sorted.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

// Coordinates of a homogeneous polynomial against the slice basis.  Throws
// StructuralError if some term's monomial is not in the slice (wrong degree
// or wrong span).
SparseVec to_coords(const Poly& p, const DegreeSlice& slice);
Poly from_coords(const SparseVec& v, const DegreeSlice& slice);

}  // namespace ehk
