#include "ehk/cohomology.hpp"

#include <algorithm>

#include "ehk/errors.hpp"

namespace ehk {

CohomologyEngine::CohomologyEngine(SullivanModel model, Config cfg)
    : model_(std::move(model)), cfg_(cfg) {}

CohomologyEngine::DegreeData& CohomologyEngine::ensure_slice(std::uint32_t m) {
  DegreeData& d = data_[m];
  if (!d.have_slice) {
    d.slice = enumerate_basis(model_, m, SliceSpan::full, cfg_);
    d.have_slice = true;
  }
  return d;
}

const DegreeSlice& CohomologyEngine::slice(std::uint32_t m) {
  return ensure_slice(m).slice;
}

CohomologyEngine::DegreeData& CohomologyEngine::ensure_images(std::uint32_t m) {
  DegreeData& d = ensure_slice(m);
  if (d.have_images) return d;
  const DegreeSlice& next = slice(m + 1);
  DegreeData& dd = data_[m];  // re-lookup: slice(m+1) may have rehashed? map is stable
  dd.d_images.reserve(dd.slice.basis.size());
  for (const Monomial& b : dd.slice.basis) {
    const Poly image = apply_differential(model_, Poly::single(b));
    dd.d_images.push_back(image.is_zero() ? SparseVec{} : to_coords(image, next));
  }
  // Rank of d_m, by exact elimination of the image vectors.
  SparseRref<RationalField> rref(RationalField{},
                                 static_cast<std::uint32_t>(next.dim()), false);
  for (std::size_t j = 0; j < dd.d_images.size(); ++j)
    if (!dd.d_images[j].empty())
      rref.insert(dd.d_images[j], static_cast<std::uint64_t>(j));
  dd.d_rank = rref.rank();
  dd.have_images = true;
  return dd;
}

const std::vector<SparseVec>& CohomologyEngine::differential_images(
    std::uint32_t m) {
  return ensure_images(m).d_images;
}

std::uint32_t CohomologyEngine::differential_rank(std::uint32_t m) {
  return ensure_images(m).d_rank;
}

CohomologyEngine::DegreeData& CohomologyEngine::ensure_cohomology(
    std::uint32_t m) {
  DegreeData& probe = ensure_images(m);
  if (probe.have_cohomology) return probe;
  if (m > 0) ensure_images(m - 1);
  DegreeData& d = data_[m];
  const std::uint32_t dim = static_cast<std::uint32_t>(d.slice.dim());

  // Kernel of d_m from the RREF of the equation rows: row i (one per degree
  // m+1 basis monomial) lists the degree-m monomials hitting it.
  std::vector<SparseVec> eq_rows(data_[m + 1].slice.dim());
  for (std::uint32_t j = 0; j < d.d_images.size(); ++j)
    for (const auto& [i, c] : d.d_images[j]) eq_rows[i].emplace_back(j, c);
  SparseRref<RationalField> eq(RationalField{}, dim, false);
  for (std::size_t i = 0; i < eq_rows.size(); ++i)
    if (!eq_rows[i].empty()) eq.insert(eq_rows[i], static_cast<std::uint64_t>(i));

  // Coboundary echelon first, then kernel vectors; survivors represent a
  // basis of cohomology.
  d.echelon = std::make_unique<SparseRref<RationalField>>(RationalField{}, dim,
                                                          /*track_combos=*/true);
  std::uint32_t coboundary_rank = 0;
  if (m > 0) {
    const DegreeData& below = data_[m - 1];
    for (std::size_t j = 0; j < below.d_images.size(); ++j)
      if (!below.d_images[j].empty())
        if (d.echelon->insert(below.d_images[j], kCoboundaryTag + j))
          ++coboundary_rank;
  }

  std::uint32_t kept = 0;
  for (std::uint32_t c = 0; c < dim; ++c) {
    if (eq.is_pivot(c)) continue;
    SparseVec u = eq.kernel_vector(c);
    if (d.echelon->insert(u, kept)) {
      d.reps.push_back(from_coords(u, d.slice));
      ++kept;
    }
  }
  const std::uint32_t kernel_dim = dim - eq.rank();
  if (m > 0 && coboundary_rank != data_[m - 1].d_rank)
    throw InconsistencyError("coboundary rank mismatch in degree " +
                             std::to_string(m));
  if (kept != kernel_dim - coboundary_rank)
    throw InconsistencyError("betti bookkeeping failed in degree " +
                             std::to_string(m));
  d.betti = kept;
  d.have_cohomology = true;
  return d;
}

std::uint32_t CohomologyEngine::betti(std::uint32_t m) {
  return ensure_cohomology(m).betti;
}

const std::vector<Poly>& CohomologyEngine::representatives(std::uint32_t m) {
  return ensure_cohomology(m).reps;
}

SparseVec CohomologyEngine::class_coords(const Poly& cocycle) {
  const auto deg = cocycle.homogeneous_degree();
  if (!deg) throw StructuralError("class_coords: cocycle must be homogeneous");
  if (!apply_differential(model_, cocycle).is_zero())
    throw StructuralError("class_coords: input is not closed");
  DegreeData& d = ensure_cohomology(*deg);
  if (cocycle.is_zero()) return {};
  auto red = d.echelon->reduce(to_coords(cocycle, d.slice));
  if (!red.residual.empty())
    throw InconsistencyError("closed element escaped kernel = B + H splitting");
  SparseVec coords;
  for (const auto& [tag, c] : red.combo)
    if (tag < kCoboundaryTag && c != 0)
      coords.emplace_back(static_cast<std::uint32_t>(tag), c);
  std::sort(coords.begin(), coords.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return coords;
}

bool CohomologyEngine::composite_vanishes(std::uint32_t m) {
  const auto& first = differential_images(m);
  const auto& second = differential_images(m + 1);
  for (const SparseVec& col : first) {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [i, c] : col)
      for (const auto& [i2, c2] : second[i]) acc[i2] += c * c2;
    for (const auto& [idx, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace ehk
