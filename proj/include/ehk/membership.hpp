#pragma once

#include <cstdint>
#include <vector>

#include "ehk/config.hpp"
#include "ehk/model.hpp"
#include "ehk/slice.hpp"

namespace ehk {

// Decision data for "target in the ideal slice sum_j S_{t - deg g_j} * g_j
// of the even subalgebra in degree t".  Exactly one of the two certificate
// shapes is populated, and it has been verified exactly before the value is
// returned:
//   member:      witness[j] with sum_j witness[j] * g_j == target, re-checked
//                by exact polynomial multiplication;
//   not member:  a linear functional on the degree-t slice (sparse
//                coordinates) vanishing on every product m * g_j and not on
//                the target, re-checked by exact sparse dot products.
struct Membership {
  bool member = false;
  std::vector<Poly> witness;
  SparseVec functional;
  std::uint32_t target_degree = 0;

  // Diagnostics.
  std::size_t slice_dim = 0;
  std::size_t row_count = 0;
  bool used_modular = false;
  std::uint32_t primes_used = 0;
};

// `target` and every generator must be homogeneous words in even generators.
// A zero target is trivially a member.  Dimensions are bounded by
// cfg.max_slice_dim / cfg.max_degree (CapacityError beyond them, never a
// guess).  Deterministic: fixed row order, fixed prime ladder, and modular
// results only accepted after exact verification.
Membership ideal_slice_membership(const SullivanModel& model, const Poly& target,
                                  const std::vector<Poly>& generators,
                                  const Config& cfg);

// Decides several targets of one common degree against the same ideal slice.
// The row space and its elimination are shared across targets, so this costs
// roughly one membership query plus a cheap reduction per extra target.
std::vector<Membership> ideal_slice_membership_batch(
    const SullivanModel& model, const std::vector<Poly>& targets,
    const std::vector<Poly>& generators, const Config& cfg);

}  // namespace ehk
