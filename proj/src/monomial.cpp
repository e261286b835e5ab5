#include "ehk/monomial.hpp"

#include <algorithm>
#include <string>

#include "ehk/errors.hpp"

namespace ehk {

std::uint32_t Monomial::word_length() const {
  std::uint32_t w = static_cast<std::uint32_t>(odd.size());
  for (const auto& [id, e] : even) w += e;
  return w;
}

std::uint32_t Monomial::exponent_of(std::uint32_t id) const {
  for (const auto& [gid, e] : even)
    if (gid == id) return e;
  for (std::uint32_t gid : odd)
    if (gid == id) return 1;
  return 0;
}

Monomial make_monomial(
    GeneratorTable gens,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> even_part,
    std::vector<std::uint32_t> odd_part) {
  std::sort(even_part.begin(), even_part.end());
  std::sort(odd_part.begin(), odd_part.end());
  Monomial m;
  std::uint64_t degree = 0;
  for (std::size_t i = 0; i < even_part.size(); ++i) {
    const auto [id, e] = even_part[i];
    if (id >= gens.size())
      throw StructuralError("monomial references unknown generator id " +
                            std::to_string(id));
    if (!is_even(gens[id]))
      throw StructuralError("odd generator '" + gens[id].name +
                            "' used with an exponent");
    if (e == 0) throw StructuralError("zero exponent in monomial");
    if (i > 0 && even_part[i - 1].first == id)
      throw StructuralError("repeated even generator id " + std::to_string(id));
    degree += static_cast<std::uint64_t>(gens[id].degree) * e;
  }
  for (std::size_t i = 0; i < odd_part.size(); ++i) {
    const std::uint32_t id = odd_part[i];
    if (id >= gens.size())
      throw StructuralError("monomial references unknown generator id " +
                            std::to_string(id));
    if (is_even(gens[id]))
      throw StructuralError("even generator '" + gens[id].name +
                            "' used as an odd factor");
    if (i > 0 && odd_part[i - 1] == id)
      throw StructuralError("repeated odd generator id " + std::to_string(id) +
                            " (square of an odd generator is zero)");
    degree += gens[id].degree;
  }
  if (degree > 0xffffffffull) throw CapacityError("monomial degree overflow");
  m.degree = static_cast<std::uint32_t>(degree);
  m.even = std::move(even_part);
  m.odd = std::move(odd_part);
  return m;
}

Monomial even_power(GeneratorTable gens, std::uint32_t id, std::uint32_t e) {
  return make_monomial(gens, {{id, e}}, {});
}

namespace {

// Detects an id used with even role on one side and odd role on the other.
void check_universe(const Monomial& a, const Monomial& b) {
  auto clash = [](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& ev,
                  const std::vector<std::uint32_t>& od) {
    auto it = ev.begin();
    for (std::uint32_t id : od) {
      while (it != ev.end() && it->first < id) ++it;
      if (it != ev.end() && it->first == id) return true;
    }
    return false;
  };
  if (clash(a.even, b.odd) || clash(b.even, a.odd))
    throw StructuralError(
        "monomial product mixes two generator universes (id parity clash)");
}

}  // namespace

std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a,
                                                     const Monomial& b) {
  check_universe(a, b);

  Monomial out;
  out.degree = a.degree + b.degree;

  out.even.reserve(a.even.size() + b.even.size());
  {
    auto ia = a.even.begin(), ib = b.even.begin();
    while (ia != a.even.end() || ib != b.even.end()) {
      if (ib == b.even.end() || (ia != a.even.end() && ia->first < ib->first)) {
        out.even.push_back(*ia++);
      } else if (ia == a.even.end() || ib->first < ia->first) {
        out.even.push_back(*ib++);
      } else {
        out.even.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
  }

  // Merge odd factors.  Moving b[j] past the remaining factors of a performs
  // that many transpositions of odd elements; the sign is their parity.
  // A shared odd factor squares to zero.
  out.odd.reserve(a.odd.size() + b.odd.size());
  std::uint64_t inversions = 0;
  {
    auto ia = a.odd.begin(), ib = b.odd.begin();
    while (ia != a.odd.end() || ib != b.odd.end()) {
      if (ib == b.odd.end()) {
        out.odd.push_back(*ia++);
      } else if (ia == a.odd.end()) {
        out.odd.push_back(*ib++);
      } else if (*ia < *ib) {
        out.odd.push_back(*ia++);
      } else if (*ib < *ia) {
        inversions += static_cast<std::uint64_t>(a.odd.end() - ia);
        out.odd.push_back(*ib++);
      } else {
        return std::nullopt;
      }
    }
  }
  return std::make_pair(std::move(out), (inversions % 2 == 0) ? 1 : -1);
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  // Walk the merged support in ascending id; at the first id where the
  // exponents differ, the larger exponent sorts first.
  auto ea = a.even.begin(), eb = b.even.begin();
  auto oa = a.odd.begin(), ob = b.odd.begin();
  auto next_id = [&](const Monomial&,
                     decltype(ea) e, decltype(oa) o,
                     decltype(ea) eend, decltype(oa) oend) -> std::uint32_t {
    std::uint32_t id = 0xffffffffu;
    if (e != eend) id = std::min(id, e->first);
    if (o != oend) id = std::min(id, *o);
    return id;
  };
  while (true) {
    const std::uint32_t ida = next_id(a, ea, oa, a.even.end(), a.odd.end());
    const std::uint32_t idb = next_id(b, eb, ob, b.even.end(), b.odd.end());
    const std::uint32_t id = std::min(ida, idb);
    if (id == 0xffffffffu) return false;  // identical support and exponents
    std::uint32_t xa = 0, xb = 0;
    if (ea != a.even.end() && ea->first == id) xa = (ea++)->second;
    if (oa != a.odd.end() && *oa == id) xa = 1, ++oa;
    if (eb != b.even.end() && eb->first == id) xb = (eb++)->second;
    if (ob != b.odd.end() && *ob == id) xb = 1, ++ob;
    if (xa != xb) return xa > xb;
  }
}

std::string monomial_to_string(const Monomial& m, GeneratorTable gens) {
  if (m.is_unit()) return "1";
  // Factors in ascending id order, merged across the even/odd split.
  std::string out;
  auto ie = m.even.begin();
  auto io = m.odd.begin();
  auto append = [&out](const std::string& name, std::uint32_t e) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  while (ie != m.even.end() || io != m.odd.end()) {
    if (io == m.odd.end() || (ie != m.even.end() && ie->first < *io)) {
      append(gens[ie->first].name, ie->second);
      ++ie;
    } else {
      append(gens[*io].name, 1);
      ++io;
    }
  }
  return out;
}

}  // namespace ehk
