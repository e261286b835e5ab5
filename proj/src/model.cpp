#include "ehk/model.hpp"

#include <algorithm>

#include "ehk/errors.hpp"

namespace ehk {

std::vector<std::uint32_t> SullivanModel::even_ids() const {
  std::vector<std::uint32_t> out;
  for (const auto& g : gens)
    if (is_even(g)) out.push_back(g.id);
  return out;
}

std::vector<std::uint32_t> SullivanModel::odd_ids() const {
  std::vector<std::uint32_t> out;
  for (const auto& g : gens)
    if (!is_even(g)) out.push_back(g.id);
  return out;
}

std::optional<std::uint32_t> SullivanModel::find_generator(
    const std::string& name) const {
  for (const auto& g : gens)
    if (g.name == name) return g.id;
  return std::nullopt;
}

Poly apply_differential(const SullivanModel& model, const Poly& p) {
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    // Leibniz over the factor blocks of m in ascending id order: for
    // m = B_1 ... B_r with B_j = g_j^{e_j}, the block-j term is
    //   (-1)^{deg(B_1...B_{j-1})} * e_j * B_1...B_{j-1} * d(g_j) *
    //   g_j^{e_j - 1} * B_{j+1}...B_r
    // (inside a block the sign is free: an even g_j commutes with
    // everything, and an odd g_j has e_j = 1).  The remaining reordering
    // signs come out of the monomial products below.
    struct Factor {
      std::uint32_t id;
      std::uint32_t exp;  // 1 for odd
    };
    std::vector<Factor> factors;
    factors.reserve(m.even.size() + m.odd.size());
    {
      auto ie = m.even.begin();
      auto io = m.odd.begin();
      while (ie != m.even.end() || io != m.odd.end()) {
        if (io == m.odd.end() || (ie != m.even.end() && ie->first < *io))
          factors.push_back({ie->first, ie->second}), ++ie;
        else
          factors.push_back({*io, 1}), ++io;
      }
    }
    std::uint64_t prefix_degree = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto [id, exp] = factors[j];
      const Generator& g = model.gens[id];
      const Poly& dg = model.diff[id];
      if (!dg.is_zero()) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pre_ev, post_ev;
        std::vector<std::uint32_t> pre_od, post_od;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (i == j) {
            if (exp > 1) post_ev.emplace_back(id, exp - 1);
            continue;
          }
          const Factor& f = factors[i];
          auto& ev = (i < j) ? pre_ev : post_ev;
          auto& od = (i < j) ? pre_od : post_od;
          if (is_even(model.gens[f.id]))
            ev.emplace_back(f.id, f.exp);
          else
            od.push_back(f.id);
        }
        Monomial prefix =
            make_monomial(model.table(), std::move(pre_ev), std::move(pre_od));
        Monomial suffix =
            make_monomial(model.table(), std::move(post_ev), std::move(post_od));

        Rational coeff = c;
        if (is_even(g)) coeff *= static_cast<long>(exp);
        if ((prefix_degree % 2) != 0) coeff = -coeff;
        Poly piece = mono_mul(prefix, coeff, dg) * Poly::single(suffix);
        for (const auto& t : piece.terms()) out.push_back(t);
      }
      prefix_degree += static_cast<std::uint64_t>(g.degree) * exp;
    }
  }
  return Poly::from_terms(std::move(out));
}

namespace {

void note(ValidationReport& r, const std::string& msg) {
  r.detail.push_back(msg);
}

}  // namespace

ValidationReport validate(const SullivanModel& model) {
  ValidationReport r;

  // -- well-formedness -----------------------------------------------------
  r.well_formed = true;
  if (model.diff.size() != model.gens.size()) {
    r.well_formed = false;
    note(r, "differential table size does not match generator count");
  }
  for (std::size_t i = 0; i < model.gens.size() && r.well_formed; ++i) {
    const Generator& g = model.gens[i];
    if (g.id != i) {
      r.well_formed = false;
      note(r, "generator ids must equal their positions (id " +
                  std::to_string(g.id) + " at position " + std::to_string(i) + ")");
      break;
    }
    if (g.degree == 0 ||
        (g.degree % 2 == 0) != (g.parity == Parity::even)) {
      r.well_formed = false;
      note(r, "generator '" + g.name + "': bad degree/parity");
      break;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (model.gens[j].name == g.name) {
        r.well_formed = false;
        note(r, "duplicate generator name '" + g.name + "'");
        break;
      }
  }
  if (!r.well_formed) return r;

  // -- homogeneity of the differential -------------------------------------
  r.homogeneous = true;
  for (const Generator& g : model.gens) {
    const Poly& dg = model.diff[g.id];
    if (dg.is_zero()) continue;
    const auto deg = dg.homogeneous_degree();
    if (!deg || *deg != g.degree + 1) {
      r.homogeneous = false;
      note(r, "d(" + g.name + ") is not homogeneous of degree " +
                  std::to_string(g.degree + 1));
    }
  }

  // -- d^2 = 0 --------------------------------------------------------------
  r.d_squared_zero = true;
  if (r.homogeneous) {
    for (const Generator& g : model.gens) {
      if (!apply_differential(model, model.diff[g.id]).is_zero()) {
        r.d_squared_zero = false;
        note(r, "d(d " + g.name + ") != 0");
      }
    }
  } else {
    r.d_squared_zero = false;
    note(r, "d^2 not checked: differential is not homogeneous");
  }

  // -- minimality: d(v) has no linear part ----------------------------------
  r.minimal = true;
  for (const Generator& g : model.gens) {
    for (const auto& [m, c] : model.diff[g.id].terms()) {
      if (m.word_length() < 2) {
        r.minimal = false;
        note(r, "d(" + g.name + ") has a term of word length < 2");
        break;
      }
    }
  }

  // -- purity ----------------------------------------------------------------
  r.pure = true;
  for (const Generator& g : model.gens) {
    if (is_even(g)) {
      if (!model.diff[g.id].is_zero()) {
        r.pure = false;
        note(r, "even generator '" + g.name + "' has nonzero differential");
      }
    } else if (!model.diff[g.id].is_even_word()) {
      r.pure = false;
      note(r, "d(" + g.name + ") leaves the even subalgebra");
    }
  }
  if (r.pure) {
    PurityCertificate cert;
    cert.even_ids = model.even_ids();
    cert.odd_ids = model.odd_ids();
    r.purity = std::move(cert);
  }

  // -- simple connectivity ----------------------------------------------------
  r.simply_connected = true;
  for (const Generator& g : model.gens)
    if (g.degree == 1) {
      r.simply_connected = false;
      note(r, "generator '" + g.name + "' has degree 1");
    }

  return r;
}

std::int64_t formal_dimension(const SullivanModel& model) {
  std::int64_t fd = 0;
  for (const Generator& g : model.gens) {
    if (is_even(g))
      fd -= static_cast<std::int64_t>(g.degree) - 1;
    else
      fd += g.degree;
  }
  return fd;
}

}  // namespace ehk
