#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ehk/rational.hpp"

namespace ehk {

// ---------------------------------------------------------------------------
// Coefficient fields.
// ---------------------------------------------------------------------------

// Exact rationals.  GMP keeps every value canonical, so elimination over
// this field is exact by construction.
struct RationalField {
  using value_type = Rational;
  bool is_zero(const value_type& x) const { return x == 0; }
  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return Rational(1) / a; }
};

// Z/p for a prime p < 2^31, residues in [0, p).  Products fit in 62 bits,
// so plain uint64 arithmetic suffices.
class PrimeField {
 public:
  using value_type = std::uint64_t;
  explicit PrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const { return p_; }

  bool is_zero(value_type x) const { return x == 0; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type inv(value_type a) const { return pow(a, p_ - 2); }

  // num * den^{-1} mod p; fails (ok=false) when p divides the denominator,
  // in which case the caller must skip this prime.
  value_type from_rational(const Rational& q, bool& ok) const;

 private:
  std::uint64_t p_;
};

// The first `count` primes below 2^31 in descending order, certified by GMP
// primality testing.  Deterministic; cached.
const std::vector<std::uint64_t>& prime_ladder(std::size_t count);

// ---------------------------------------------------------------------------
// Incremental sparse reduced row echelon form.
// ---------------------------------------------------------------------------
//
// Rows are sparse index-sorted vectors.  The structure maintains full RREF at
// all times: every stored row has leading coefficient 1 at its pivot column
// and its tail supported on free (non-pivot) columns only.  New pivots
// trigger back-substitution into earlier rows, so tails stay short whenever
// the quotient (free columns) is small — which is exactly the regime the
// cohomology and membership computations live in.
//
// When `track_combos` is set, each stored row also carries its expression as
// a linear combination of the original inserted rows (identified by caller
// tags), which is how membership witnesses are extracted.
template <class Field>
class SparseRref {
 public:
  using F = typename Field::value_type;
  using Vec = std::vector<std::pair<std::uint32_t, F>>;     // index-sorted
  using Combo = std::vector<std::pair<std::uint64_t, F>>;   // tag-sorted

  SparseRref(Field field, std::uint32_t ncols, bool track_combos)
      : fld_(field), ncols_(ncols), track_combos_(track_combos),
        col_pivot_(ncols, -1), col_occ_(ncols) {}

  struct Reduction {
    Vec residual;  // row - sum combo[tag] * original_row[tag]
    Combo combo;   // empty unless combos are tracked
  };

  // Reduces `row` against the current RREF without inserting it.
  Reduction reduce(Vec row) const;

  // Reduces and, if independent, normalizes and stores the row (combo seeded
  // with {tag: 1}).  Returns true when a new pivot was created.
  bool insert(Vec row, std::uint64_t tag);

  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
  std::uint32_t ncols() const { return ncols_; }
  bool is_pivot(std::uint32_t col) const { return col_pivot_[col] >= 0; }
  std::vector<std::uint32_t> pivot_columns() const;  // ascending

  // For a free column c: the vector e_c - sum_r tail_r[c] * e_{pivot(r)}.
  // It annihilates the row space (hence: a kernel vector of the matrix whose
  // rows were inserted, and equally a functional vanishing on those rows).
  Vec kernel_vector(std::uint32_t c) const;

 private:
  struct Row {
    Vec val;
    Combo combo;
    std::uint32_t pivot = 0;
  };

  void axpy(Vec& dst, const F& a, const Vec& src) const;      // dst += a*src
  void axpy(Combo& dst, const F& a, const Combo& src) const;

  Field fld_;
  std::uint32_t ncols_;
  bool track_combos_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> col_pivot_;
  // Occupancy lists: which stored rows may have a tail entry in a column.
  // Entries can be stale (the coefficient may since have cancelled); users
  // re-check against the row before acting.
  std::vector<std::vector<std::uint32_t>> col_occ_;
};

extern template class SparseRref<RationalField>;
extern template class SparseRref<PrimeField>;

// ---------------------------------------------------------------------------
// Chinese remaindering and rational reconstruction.
// ---------------------------------------------------------------------------

// Sparse residue vectors accumulated across primes (missing index = residue
// 0), with pairwise-CRT combination.  Index type is the caller's tag space.
class ResidueAccumulator {
 public:
  void add(std::uint64_t prime,
           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& residues);
  const Int& modulus() const { return modulus_; }
  std::size_t primes_added() const { return count_; }

  // Attempts to lift every coordinate to a rational with numerator and
  // denominator below sqrt(modulus/2).  nullopt if any coordinate fails —
  // the caller then adds more primes.
  std::optional<std::vector<std::pair<std::uint64_t, Rational>>> reconstruct() const;

 private:
  Int modulus_ = 1;
  std::size_t count_ = 0;
  std::vector<std::pair<std::uint64_t, Int>> residues_;  // index-sorted
};

// Lifts r (mod m) to p/q with |p|, q <= floor(sqrt(m/2)), gcd(q, m) = 1.
std::optional<Rational> rational_reconstruct(const Int& r, const Int& m);

}  // namespace ehk
