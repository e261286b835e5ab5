#include "ehk/polynomial.hpp"

#include <algorithm>

#include "ehk/errors.hpp"

namespace ehk {

namespace {

bool term_less(const Poly::Term& a, const Poly::Term& b) {
  return monomial_less(a.first, b.first);
}

}  // namespace

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
      if (merged.back().second == 0) merged.pop_back();
    } else if (t.second != 0) {
      merged.push_back(std::move(t));
    }
  }
  Poly p;
  p.terms_ = std::move(merged);
  return p;
}

Poly Poly::constant(const Rational& c) {
  if (c == 0) return Poly();
  Poly p;
  p.terms_.emplace_back(unit_monomial(), c);
  return p;
}

Poly Poly::single(Monomial m, Rational c) {
  if (c == 0) return Poly();
  Poly p;
  p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

std::optional<std::uint32_t> Poly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  const std::uint32_t d = terms_.front().first.degree;
  for (const auto& t : terms_)
    if (t.first.degree != d) return std::nullopt;
  return d;
}

bool Poly::is_even_word() const {
  for (const auto& t : terms_)
    if (!t.first.odd.empty()) return false;
  return true;
}

Poly operator+(const Poly& a, const Poly& b) {
  // Sorted merge; both inputs are already in normal form.
  std::vector<Poly::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && monomial_less(ia->first, ib->first))) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || monomial_less(ib->first, ia->first)) {
      out.push_back(*ib++);
    } else {
      Rational c = ia->second + ib->second;
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly operator-(const Poly& p) {
  std::vector<Poly::Term> out = p.terms();
  for (auto& t : out) t.second = -t.second;
  return Poly::from_terms(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Rational& c, const Poly& p) {
  if (c == 0) return Poly();
  std::vector<Poly::Term> out = p.terms();
  for (auto& t : out) t.second *= c;
  return Poly::from_terms(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = monomial_mul(ma, mb);
      if (!prod) continue;
      Rational c = ca * cb;
      if (prod->second < 0) c = -c;
      out.emplace_back(std::move(prod->first), std::move(c));
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly mono_mul(const Monomial& m, const Rational& c, const Poly& p) {
  if (c == 0) return Poly();
  std::vector<Poly::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [mp, cp] : p.terms()) {
    auto prod = monomial_mul(m, mp);
    if (!prod) continue;
    Rational coeff = c * cp;
    if (prod->second < 0) coeff = -coeff;
    out.emplace_back(std::move(prod->first), std::move(coeff));
  }
  return Poly::from_terms(std::move(out));
}

Poly poly_pow(const Poly& p, std::uint32_t e) {
  Poly acc = Poly::constant(Rational(1));
  for (std::uint32_t i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

Poly even_power_poly(GeneratorTable gens, std::uint32_t id, std::uint32_t e) {
  if (e == 0) return Poly::constant(Rational(1));
  return Poly::single(even_power(gens, id, e));
}

std::string poly_to_string(const Poly& p, GeneratorTable gens) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_coeff = (mag == 1) && !m.is_unit();
    if (!unit_coeff) out += rational_to_string(mag);
    if (!m.is_unit()) {
      if (!unit_coeff) out += "*";
      out += monomial_to_string(m, gens);
    }
  }
  return out;
}

}  // namespace ehk
