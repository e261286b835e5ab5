#include "ehk/membership.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "ehk/errors.hpp"
#include "ehk/linalg.hpp"

namespace ehk {

namespace {

Rational sparse_dot(const SparseVec& a, const SparseVec& b) {
  Rational acc(0);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<Membership> ideal_slice_membership_batch(
    const SullivanModel& model, const std::vector<Poly>& targets,
    const std::vector<Poly>& generators, const Config& cfg) {
  for (const Poly& g : generators) {
    if (g.is_zero()) throw StructuralError("ideal generators must be nonzero");
    if (!g.homogeneous_degree() || !g.is_even_word())
      throw StructuralError(
          "ideal generators must be homogeneous words in even generators");
  }
  std::optional<std::uint32_t> tdeg;
  for (const Poly& t : targets) {
    const auto d = t.homogeneous_degree();
    if (!d) throw StructuralError("membership target must be homogeneous");
    if (!t.is_even_word())
      throw StructuralError("membership target must lie in the even subalgebra");
    if (t.is_zero()) continue;
    if (tdeg && *tdeg != *d)
      throw StructuralError("batched membership targets must share one degree");
    tdeg = *d;
  }

  std::vector<Membership> out(targets.size());
  std::vector<std::uint32_t> open;  // indices still undecided
  for (std::uint32_t ti = 0; ti < targets.size(); ++ti) {
    if (targets[ti].is_zero()) {
      out[ti].member = true;
      out[ti].witness.assign(generators.size(), Poly::zero());
    } else {
      out[ti].target_degree = *tdeg;
      open.push_back(ti);
    }
  }
  if (open.empty()) return out;

  const DegreeSlice slice =
      enumerate_basis(model, *tdeg, SliceSpan::even_subalgebra, cfg);
  std::vector<SparseVec> target_coords(targets.size());
  for (std::uint32_t ti : open) target_coords[ti] = to_coords(targets[ti], slice);

  // One row per (generator j, multiplier monomial m): coordinates of m * g_j
  // in the target slice.  Row order is fixed once, so the elimination and
  // therefore every certificate is deterministic.
  struct RowSource {
    std::uint32_t gen;
    std::uint32_t mono;
  };
  std::vector<DegreeSlice> multipliers(generators.size());
  std::vector<RowSource> sources;
  std::vector<SparseVec> rows;
  for (std::uint32_t j = 0; j < generators.size(); ++j) {
    const std::uint32_t gdeg = *generators[j].homogeneous_degree();
    if (gdeg > *tdeg) continue;
    multipliers[j] =
        enumerate_basis(model, *tdeg - gdeg, SliceSpan::even_subalgebra, cfg);
    for (std::uint32_t mi = 0; mi < multipliers[j].basis.size(); ++mi) {
      SparseVec row = to_coords(
          mono_mul(multipliers[j].basis[mi], Rational(1), generators[j]), slice);
      if (row.empty()) continue;
      sources.push_back({j, mi});
      rows.push_back(std::move(row));
    }
  }
  for (std::uint32_t ti : open) {
    out[ti].slice_dim = slice.dim();
    out[ti].row_count = rows.size();
  }

  // Insertion order per the pivoting rule: ascending leading column, then
  // larger support first, then creation index.
  std::vector<std::uint32_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&rows](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t la = rows[a].front().first;
    const std::uint32_t lb = rows[b].front().first;
    if (la != lb) return la < lb;
    if (rows[a].size() != rows[b].size()) return rows[a].size() > rows[b].size();
    return a < b;
  });

  // Exact verification closures; every path funnels through these.
  auto accept_member =
      [&](std::uint32_t ti,
          const std::vector<std::pair<std::uint64_t, Rational>>& combo) {
        std::vector<std::vector<Poly::Term>> parts(generators.size());
        for (const auto& [tag, c] : combo) {
          const RowSource& src = sources[static_cast<std::size_t>(tag)];
          parts[src.gen].emplace_back(multipliers[src.gen].basis[src.mono], c);
        }
        std::vector<Poly> witness;
        Poly total;
        for (std::uint32_t j = 0; j < generators.size(); ++j) {
          Poly w = Poly::from_terms(std::move(parts[j]));
          total = total + w * generators[j];
          witness.push_back(std::move(w));
        }
        if (!(total == targets[ti])) return false;
        out[ti].member = true;
        out[ti].witness = std::move(witness);
        return true;
      };
  auto accept_nonmember = [&](std::uint32_t ti, const SparseVec& phi) {
    if (phi.empty()) return false;
    for (const SparseVec& row : rows)
      if (sparse_dot(phi, row) != 0) return false;
    if (sparse_dot(phi, target_coords[ti]) == 0) return false;
    out[ti].member = false;
    out[ti].functional = phi;
    return true;
  };
  auto close = [&](std::uint32_t ti) {
    open.erase(std::find(open.begin(), open.end(), ti));
  };

  const auto run_exact = [&]() {
    SparseRref<RationalField> rref(RationalField{},
                                   static_cast<std::uint32_t>(slice.dim()), true);
    for (std::uint32_t id : order) rref.insert(rows[id], id);
    for (std::uint32_t ti : std::vector<std::uint32_t>(open)) {
      auto red = rref.reduce(target_coords[ti]);
      if (red.residual.empty()) {
        if (!accept_member(ti, red.combo))
          throw InconsistencyError("membership witness failed exact re-check");
      } else {
        if (!accept_nonmember(ti, rref.kernel_vector(red.residual.front().first)))
          throw InconsistencyError("membership functional failed exact re-check");
      }
      close(ti);
    }
  };

  if (slice.dim() <= cfg.exact_dim_limit) {
    run_exact();
    return out;
  }

  // Certified multi-modular path.  Per prime: eliminate mod p once, extract a
  // candidate certificate per undecided target, pool residues by
  // elimination-transcript signature (mixed with the target index), and try
  // to lift; a lift is accepted only after the exact re-check above.  Unlucky
  // primes can only delay (their transcripts land in other pools or the lift
  // fails verification); after the ladder is exhausted the exact path decides
  // unconditionally.
  constexpr std::size_t kMaxPrimes = 24;
  const auto& ladder = prime_ladder(kMaxPrimes);
  std::map<std::uint64_t, ResidueAccumulator> pools;
  bool combos_mode = false;
  for (std::size_t pi = 0; pi < ladder.size() && !open.empty(); ++pi) {
    const PrimeField fp(ladder[pi]);
    bool prime_ok = true;
    auto reduce_vec = [&](const SparseVec& v) {
      std::vector<std::pair<std::uint32_t, std::uint64_t>> mv;
      mv.reserve(v.size());
      for (const auto& [idx, c] : v) {
        bool ok = true;
        const std::uint64_t r = fp.from_rational(c, ok);
        if (!ok) {
          prime_ok = false;
          break;
        }
        if (r != 0) mv.emplace_back(idx, r);
      }
      return mv;
    };
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> mod_targets(
        targets.size());
    for (std::uint32_t ti : open) {
      mod_targets[ti] = reduce_vec(target_coords[ti]);
      if (!prime_ok) break;
    }
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> mod_rows;
    if (prime_ok) {
      mod_rows.reserve(rows.size());
      for (const SparseVec& row : rows) {
        mod_rows.push_back(reduce_vec(row));
        if (!prime_ok) break;
      }
    }
    if (!prime_ok) continue;

    auto eliminate = [&](bool with_combos) {
      SparseRref<PrimeField> rref(fp, static_cast<std::uint32_t>(slice.dim()),
                                  with_combos);
      std::uint64_t sig = 1469598103934665603ull;
      for (std::uint32_t id : order) {
        if (mod_rows[id].empty()) continue;
        // Transcript signature: which rows created pivots, and where.  Two
        // primes are pooled only when their eliminations ran identically at
        // the structural level, which makes the lifted objects consistent.
        const std::size_t before = rref.rank();
        rref.insert(mod_rows[id], id);
        if (rref.rank() != before) {
          sig = fnv_step(sig, id);
          sig = fnv_step(sig, rref.pivot_columns().back());
        }
      }
      return std::make_pair(std::move(rref), sig);
    };

    auto [rref, sig] = eliminate(combos_mode);
    using ModVec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    auto reduce_all = [&](SparseRref<PrimeField>& r) {
      std::vector<std::pair<std::uint32_t, SparseRref<PrimeField>::Reduction>>
          reds;
      for (std::uint32_t ti : open) reds.emplace_back(ti, r.reduce(mod_targets[ti]));
      return reds;
    };
    auto reds = reduce_all(rref);
    if (!combos_mode) {
      bool member_candidate = false;
      for (const auto& [ti, red] : reds)
        if (red.residual.empty()) member_candidate = true;
      if (member_candidate) {
        combos_mode = true;
        auto redo = eliminate(true);
        rref = std::move(redo.first);
        sig = redo.second;
        reds = reduce_all(rref);
      }
    }
    for (std::uint32_t ti : open) ++out[ti].primes_used;

    for (const auto& [ti, red] : reds) {
      if (!red.residual.empty()) {
        const std::uint32_t free_col = red.residual.front().first;
        ModVec phi_p = rref.kernel_vector(free_col);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> residues;
        residues.reserve(phi_p.size());
        for (const auto& [idx, v] : phi_p) residues.emplace_back(idx, v);
        const std::uint64_t key =
            fnv_step(fnv_step(sig, 0xf00dull), ti) ^ free_col;
        pools[key].add(fp.prime(), residues);
        if (auto lift = pools[key].reconstruct()) {
          SparseVec phi;
          phi.reserve(lift->size());
          for (auto& [idx, q] : *lift)
            phi.emplace_back(static_cast<std::uint32_t>(idx), std::move(q));
          if (accept_nonmember(ti, phi)) {
            out[ti].used_modular = true;
            close(ti);
          }
        }
      } else {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> residues;
        residues.reserve(red.combo.size());
        for (const auto& [tag, v] : red.combo) residues.emplace_back(tag, v);
        const std::uint64_t key = fnv_step(fnv_step(sig, 0xbeefull), ti);
        pools[key].add(fp.prime(), residues);
        if (auto lift = pools[key].reconstruct()) {
          if (accept_member(ti, *lift)) {
            out[ti].used_modular = true;
            close(ti);
          }
        }
      }
    }
  }

  // The ladder did not certify every target (essentially impossible for
  // honest inputs, but soundness must not depend on luck): decide exactly.
  if (!open.empty()) run_exact();
  return out;
}

Membership ideal_slice_membership(const SullivanModel& model, const Poly& target,
                                  const std::vector<Poly>& generators,
                                  const Config& cfg) {
  std::vector<Poly> targets{target};
  return std::move(
      ideal_slice_membership_batch(model, targets, generators, cfg)[0]);
}

}  // namespace ehk
