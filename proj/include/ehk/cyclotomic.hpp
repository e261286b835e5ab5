#pragma once

#include <cstdint>
#include <vector>

#include "ehk/rational.hpp"

namespace ehk {

// Exact arithmetic in Z[zeta_k] = Z[x] / Phi_k(x), with the k-th cyclotomic
// polynomial computed exactly by dividing x^k - 1 by the product of Phi_d
// over proper divisors d of k.  Elements are integer coefficient vectors of
// length deg Phi_k (low to high).  This is how root-of-unity evaluation
// certificates are checked without any floating point.
class Cyclotomic {
 public:
  using Elt = std::vector<Int>;

  explicit Cyclotomic(std::uint32_t k);

  std::uint32_t order() const { return k_; }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(phi_.size() - 1); }
  // Monic modulus coefficients, low to high.
  const std::vector<Int>& modulus() const { return phi_; }

  Elt zero() const { return Elt(degree(), Int(0)); }
  Elt one() const;
  // zeta^e reduced modulo Phi_k.
  Elt root_power(std::uint64_t e) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt scale(const Int& c, const Elt& a) const;
  bool is_zero(const Elt& a) const;

 private:
  // Remainder of an arbitrary integer polynomial (low-to-high) mod Phi_k.
  Elt reduce(std::vector<Int> poly) const;

  std::uint32_t k_;
  std::vector<Int> phi_;
};

}  // namespace ehk
