#include "ehk/linalg.hpp"

#include <algorithm>

#include "ehk/errors.hpp"

namespace ehk {

// ---------------------------------------------------------------------------
// PrimeField
// ---------------------------------------------------------------------------

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type r = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::value_type PrimeField::from_rational(const Rational& q,
                                                 bool& ok) const {
  const std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p_);
  const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p_);
  if (den == 0) {
    ok = false;
    return 0;
  }
  ok = true;
  return mul(num, inv(den));
}

const std::vector<std::uint64_t>& prime_ladder(std::size_t count) {
  static std::vector<std::uint64_t> ladder;
  if (ladder.size() < count) {
    std::uint64_t candidate =
        ladder.empty() ? ((1ull << 31) - 1) : ladder.back() - 2;
    while (ladder.size() < count) {
      Int c(static_cast<unsigned long>(candidate));
      if (mpz_probab_prime_p(c.get_mpz_t(), 40) > 0) ladder.push_back(candidate);
      candidate -= 2;
    }
  }
  return ladder;
}

// ---------------------------------------------------------------------------
// SparseRref
// ---------------------------------------------------------------------------

template <class Field>
void SparseRref<Field>::axpy(Vec& dst, const F& a, const Vec& src) const {
  Vec out;
  out.reserve(dst.size() + src.size());
  auto id = dst.begin();
  auto is = src.begin();
  while (id != dst.end() || is != src.end()) {
    if (is == src.end() || (id != dst.end() && id->first < is->first)) {
      out.push_back(*id++);
    } else if (id == dst.end() || is->first < id->first) {
      F v = fld_.mul(a, is->second);
      if (!fld_.is_zero(v)) out.emplace_back(is->first, std::move(v));
      ++is;
    } else {
      F v = fld_.add(id->second, fld_.mul(a, is->second));
      if (!fld_.is_zero(v)) out.emplace_back(id->first, std::move(v));
      ++id;
      ++is;
    }
  }
  dst = std::move(out);
}

template <class Field>
void SparseRref<Field>::axpy(Combo& dst, const F& a, const Combo& src) const {
  Combo out;
  out.reserve(dst.size() + src.size());
  auto id = dst.begin();
  auto is = src.begin();
  while (id != dst.end() || is != src.end()) {
    if (is == src.end() || (id != dst.end() && id->first < is->first)) {
      out.push_back(*id++);
    } else if (id == dst.end() || is->first < id->first) {
      F v = fld_.mul(a, is->second);
      if (!fld_.is_zero(v)) out.emplace_back(is->first, std::move(v));
      ++is;
    } else {
      F v = fld_.add(id->second, fld_.mul(a, is->second));
      if (!fld_.is_zero(v)) out.emplace_back(id->first, std::move(v));
      ++id;
      ++is;
    }
  }
  dst = std::move(out);
}

template <class Field>
typename SparseRref<Field>::Reduction SparseRref<Field>::reduce(Vec row) const {
  Reduction red;
  red.residual = std::move(row);
  // Stored rows have their tails on free columns, so eliminating the entry
  // at a pivot column only introduces entries at larger, free indices: one
  // left-to-right sweep terminates.
  std::size_t i = 0;
  while (i < red.residual.size()) {
    const auto [c, a] = red.residual[i];
    const std::int32_t r = col_pivot_[c];
    if (r < 0) {
      ++i;
      continue;
    }
    const Row& pivot_row = rows_[static_cast<std::uint32_t>(r)];
    const F factor = fld_.neg(a);
    axpy(red.residual, factor, pivot_row.val);
    if (track_combos_) {
      // residual -= a*stored, and stored = sum combo*originals, so the
      // accumulated expression of (row - residual) gains a*combo.
      axpy(red.combo, a, pivot_row.combo);
    }
    // The entry at c cancelled exactly; everything before position i is
    // untouched (smaller free columns), so the sweep resumes at i.
  }
  return red;
}

template <class Field>
bool SparseRref<Field>::insert(Vec row, std::uint64_t tag) {
  Reduction red = reduce(std::move(row));
  if (red.residual.empty()) return false;

  Row stored;
  stored.pivot = red.residual[0].first;
  const F lead_inv = fld_.inv(red.residual[0].second);
  stored.val = std::move(red.residual);
  for (auto& [c, v] : stored.val) v = fld_.mul(v, lead_inv);
  if (track_combos_) {
    // original = sum combo*origs + residual  =>
    // stored = residual/lead = original/lead - sum (combo/lead)*origs.
    stored.combo.reserve(red.combo.size() + 1);
    for (auto& [t, v] : red.combo)
      stored.combo.emplace_back(t, fld_.neg(fld_.mul(v, lead_inv)));
    Combo self{{tag, lead_inv}};
    axpy(stored.combo, fld_.one(), self);
  }

  const std::uint32_t new_id = static_cast<std::uint32_t>(rows_.size());
  const std::uint32_t pivot = stored.pivot;

  // Back-substitute the new pivot out of every stored row with a tail entry
  // there, keeping the structure fully reduced.
  std::vector<std::uint32_t> holders = col_occ_[pivot];
  std::sort(holders.begin(), holders.end());
  holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
  for (std::uint32_t rid : holders) {
    Row& target = rows_[rid];
    auto it = std::lower_bound(
        target.val.begin(), target.val.end(), pivot,
        [](const std::pair<std::uint32_t, F>& e, std::uint32_t c) {
          return e.first < c;
        });
    if (it == target.val.end() || it->first != pivot) continue;  // stale
    const F factor = fld_.neg(it->second);
    axpy(target.val, factor, stored.val);
    if (track_combos_) axpy(target.combo, factor, stored.combo);
    for (std::size_t t = 1; t < stored.val.size(); ++t)
      col_occ_[stored.val[t].first].push_back(rid);
  }
  col_occ_[pivot].clear();

  for (std::size_t t = 1; t < stored.val.size(); ++t)
    col_occ_[stored.val[t].first].push_back(new_id);
  col_pivot_[pivot] = static_cast<std::int32_t>(new_id);
  rows_.push_back(std::move(stored));
  return true;
}

template <class Field>
std::vector<std::uint32_t> SparseRref<Field>::pivot_columns() const {
  std::vector<std::uint32_t> cols;
  cols.reserve(rows_.size());
  for (std::uint32_t c = 0; c < ncols_; ++c)
    if (col_pivot_[c] >= 0) cols.push_back(c);
  return cols;
}

template <class Field>
typename SparseRref<Field>::Vec SparseRref<Field>::kernel_vector(
    std::uint32_t c) const {
  if (col_pivot_[c] >= 0)
    throw StructuralError("kernel_vector: column is a pivot");
  Vec out{{c, fld_.one()}};
  std::vector<std::uint32_t> holders = col_occ_[c];
  std::sort(holders.begin(), holders.end());
  holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
  for (std::uint32_t rid : holders) {
    const Row& row = rows_[rid];
    auto it = std::lower_bound(
        row.val.begin(), row.val.end(), c,
        [](const std::pair<std::uint32_t, F>& e, std::uint32_t col) {
          return e.first < col;
        });
    if (it == row.val.end() || it->first != c) continue;  // stale
    out.emplace_back(row.pivot, fld_.neg(it->second));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template class SparseRref<RationalField>;
template class SparseRref<PrimeField>;

// ---------------------------------------------------------------------------
// CRT and rational reconstruction
// ---------------------------------------------------------------------------

std::optional<Rational> rational_reconstruct(const Int& r, const Int& m) {
  Int bound;
  mpz_fdiv_q_ui(bound.get_mpz_t(), m.get_mpz_t(), 2);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());  // floor(sqrt(m/2))
  if (bound == 0) return std::nullopt;

  Int n0 = m, n1 = r % m;
  if (n1 < 0) n1 += m;
  Int t0 = 0, t1 = 1;
  while (n1 > bound) {
    Int q = n0 / n1;
    Int n2 = n0 - q * n1;
    n0 = n1;
    n1 = n2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Int p = n1, q = t1;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  // Certify: p == q * r (mod m).
  Int check = (p - q * r) % m;
  if (check != 0) return std::nullopt;
  Rational out(p, q);
  out.canonicalize();
  return out;
}

void ResidueAccumulator::add(
    std::uint64_t prime,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& residues_in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> residues = residues_in;
  std::sort(residues.begin(), residues.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const Int p(static_cast<unsigned long>(prime));
  if (count_ == 0) {
    residues_.clear();
    for (const auto& [idx, r] : residues)
      residues_.emplace_back(idx, Int(static_cast<unsigned long>(r)));
    modulus_ = p;
    count_ = 1;
    return;
  }
  // Pairwise CRT over the union of supports; an absent index means residue 0.
  Int m_inv;
  if (mpz_invert(m_inv.get_mpz_t(), modulus_.get_mpz_t(), p.get_mpz_t()) == 0)
    throw StructuralError("CRT moduli are not coprime");
  std::vector<std::pair<std::uint64_t, Int>> merged;
  merged.reserve(residues_.size() + residues.size());
  auto ia = residues_.begin();
  auto ib = residues.begin();
  // The explicit return type matters: gmpxx expression templates hold
  // references to their operands, and `factor` dies at lambda exit.
  auto lift = [&](const Int& r_old, std::uint64_t r_new) -> Int {
    // x = r_old + modulus * ((r_new - r_old) * m_inv mod p)
    Int delta = (Int(static_cast<unsigned long>(r_new)) - r_old) % p;
    if (delta < 0) delta += p;
    Int factor = (delta * m_inv) % p;
    return r_old + modulus_ * factor;
  };
  while (ia != residues_.end() || ib != residues.end()) {
    if (ib == residues.end() ||
        (ia != residues_.end() && ia->first < ib->first)) {
      merged.emplace_back(ia->first, lift(ia->second, 0));
      ++ia;
    } else if (ia == residues_.end() || ib->first < ia->first) {
      merged.emplace_back(ib->first, lift(Int(0), ib->second));
      ++ib;
    } else {
      merged.emplace_back(ia->first, lift(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  residues_ = std::move(merged);
  modulus_ *= p;
  ++count_;
}

std::optional<std::vector<std::pair<std::uint64_t, Rational>>>
ResidueAccumulator::reconstruct() const {
  std::vector<std::pair<std::uint64_t, Rational>> out;
  out.reserve(residues_.size());
  for (const auto& [idx, r] : residues_) {
    auto q = rational_reconstruct(r, modulus_);
    if (!q) return std::nullopt;
    if (*q != 0) out.emplace_back(idx, std::move(*q));
  }
  return out;
}

}  // namespace ehk
