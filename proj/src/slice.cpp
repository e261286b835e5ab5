#include "ehk/slice.hpp"

#include <algorithm>

#include "ehk/errors.hpp"

namespace ehk {

std::optional<std::uint32_t> DegreeSlice::find(const Monomial& m) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), m, monomial_less);
  if (it == basis.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::uint32_t>(it - basis.begin());
}

namespace {

std::vector<const Generator*> span_generators(const SullivanModel& model,
                                              SliceSpan span) {
  std::vector<const Generator*> gens;
  for (const Generator& g : model.gens)
    if (span == SliceSpan::full || is_even(g)) gens.push_back(&g);
  return gens;
}

}  // namespace

std::uint64_t count_basis(const SullivanModel& model, std::uint32_t degree,
                          SliceSpan span, std::uint64_t cap) {
  const auto gens = span_generators(model, span);
  const std::uint64_t clamp = cap + 1;
  // counts[r] = number of monomials of degree r over gens[0..i), clamped.
  std::vector<std::uint64_t> counts(degree + 1, 0);
  counts[0] = 1;
  for (const Generator* g : gens) {
    std::vector<std::uint64_t> next(degree + 1, 0);
    for (std::uint32_t r = 0; r <= degree; ++r) {
      if (counts[r] == 0) continue;
      const std::uint32_t max_e = is_even(*g) ? (degree - r) / g->degree
                                              : (g->degree <= degree - r ? 1 : 0);
      for (std::uint32_t e = 0; e <= max_e; ++e) {
        const std::uint32_t d = r + e * g->degree;
        next[d] = std::min(clamp, next[d] + counts[r]);
      }
    }
    counts = std::move(next);
  }
  return counts[degree];
}

DegreeSlice enumerate_basis(const SullivanModel& model, std::uint32_t degree,
                            SliceSpan span, const Config& cfg) {
  if (degree > cfg.max_degree)
    throw CapacityError("degree " + std::to_string(degree) +
                        " exceeds EHK_MAX_DEGREE=" +
                        std::to_string(cfg.max_degree));
  const std::uint64_t count = count_basis(model, degree, span, cfg.max_slice_dim);
  if (count > cfg.max_slice_dim)
    throw CapacityError("slice dimension in degree " + std::to_string(degree) +
                        " exceeds EHK_MAX_SLICE_DIM=" +
                        std::to_string(cfg.max_slice_dim));

  const auto gens = span_generators(model, span);
  DegreeSlice slice;
  slice.degree = degree;
  slice.span = span;
  slice.basis.reserve(static_cast<std::size_t>(count));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> even_stack;
  std::vector<std::uint32_t> odd_stack;
  // Depth-first over generators in id order, exponent 0..max per even
  // generator, 0/1 per odd one.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
    if (remaining == 0) {
      slice.basis.push_back(
          make_monomial(model.table(), even_stack, odd_stack));
      return;
    }
    if (i == gens.size()) return;
    const Generator& g = *gens[i];
    self(self, i + 1, remaining);  // exponent 0
    if (is_even(g)) {
      for (std::uint32_t e = 1; e * g.degree <= remaining; ++e) {
        even_stack.emplace_back(g.id, e);
        self(self, i + 1, remaining - e * g.degree);
        even_stack.pop_back();
      }
    } else if (g.degree <= remaining) {
      odd_stack.push_back(g.id);
      self(self, i + 1, remaining - g.degree);
      odd_stack.pop_back();
    }
  };
  rec(rec, 0, degree);
  std::sort(slice.basis.begin(), slice.basis.end(), monomial_less);
  return slice;
}

SparseVec to_coords(const Poly& p, const DegreeSlice& slice) {
  SparseVec v;
  v.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    const auto idx = slice.find(m);
    if (!idx)
      throw StructuralError("polynomial term lies outside the slice (degree " +
                            std::to_string(m.degree) + " vs slice degree " +
                            std::to_string(slice.degree) + ")");
    v.emplace_back(*idx, c);
  }
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Poly from_coords(const SparseVec& v, const DegreeSlice& slice) {
  std::vector<Poly::Term> terms;
  terms.reserve(v.size());
  for (const auto& [idx, c] : v) {
    if (idx >= slice.basis.size())
      throw StructuralError("coordinate index out of slice range");
    terms.emplace_back(slice.basis[idx], c);
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace ehk
