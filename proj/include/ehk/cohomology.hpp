#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "ehk/config.hpp"
#include "ehk/linalg.hpp"
#include "ehk/model.hpp"
#include "ehk/slice.hpp"

namespace ehk {

// Exact cochain-level cohomology of a Sullivan model, one degree at a time,
// with caching.  For degree m it holds the slice basis, the sparse matrix of
// d into degree m+1 (column per basis monomial), the Betti number, and a
// fixed set of cocycle representatives; classes of arbitrary cocycles are
// expressed in that representative basis.  Everything is exact rational
// elimination — no modular arithmetic is used on this path.
//
// Determinism: slices are canonically ordered, kernel vectors are taken at
// free columns in ascending order, and representatives are kept in the order
// they prove independent, so repeated runs agree to the byte.
class CohomologyEngine {
 public:
  CohomologyEngine(SullivanModel model, Config cfg);

  const SullivanModel& model() const { return model_; }
  const Config& config() const { return cfg_; }

  const DegreeSlice& slice(std::uint32_t m);
  // d(basis_j) in coordinates of slice(m+1); one vector per basis monomial.
  const std::vector<SparseVec>& differential_images(std::uint32_t m);
  std::uint32_t differential_rank(std::uint32_t m);

  std::uint32_t betti(std::uint32_t m);
  const std::vector<Poly>& representatives(std::uint32_t m);

  // Coordinates of the class of `cocycle` in the representative basis of its
  // degree.  Verifies d(cocycle) = 0 and the membership of the class in the
  // computed cohomology (both exact); throws StructuralError otherwise.
  SparseVec class_coords(const Poly& cocycle);

  // True when the matrix composite slice(m) -> slice(m+1) -> slice(m+2) is
  // identically zero (the d^2 = 0 identity at the matrix level).
  bool composite_vanishes(std::uint32_t m);

 private:
  struct DegreeData {
    bool have_slice = false;
    bool have_images = false;
    bool have_cohomology = false;
    DegreeSlice slice;
    std::vector<SparseVec> d_images;
    std::uint32_t d_rank = 0;
    std::uint32_t betti = 0;
    std::vector<Poly> reps;
    // Echelon of coboundaries-then-representatives over slice coordinates,
    // with combinations tracked so class coordinates fall out of reduce().
    std::unique_ptr<SparseRref<RationalField>> echelon;
  };

  DegreeData& ensure_slice(std::uint32_t m);
  DegreeData& ensure_images(std::uint32_t m);
  DegreeData& ensure_cohomology(std::uint32_t m);

  SullivanModel model_;
  Config cfg_;
  std::map<std::uint32_t, DegreeData> data_;

  static constexpr std::uint64_t kCoboundaryTag = 1ull << 63;
};

}  // namespace ehk
