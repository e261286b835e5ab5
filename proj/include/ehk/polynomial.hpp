#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehk/monomial.hpp"
#include "ehk/rational.hpp"

namespace ehk {

// A polynomial in a free graded-commutative algebra: terms with nonzero
// rational coefficients, monomials in canonical order, no duplicates.  The
// zero polynomial has no terms.  All arithmetic preserves this normal form,
// so equality is structural.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;

  // Normalizes: sorts, merges duplicate monomials, drops zero coefficients.
  static Poly from_terms(std::vector<Term> terms);
  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c);
  static Poly single(Monomial m, Rational c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // The common degree of all terms, std::nullopt when inhomogeneous;
  // degree 0 for the zero polynomial.
  std::optional<std::uint32_t> homogeneous_degree() const;

  // True when every term lies in the even subalgebra (no odd factors).
  bool is_even_word() const;

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }

 private:
  std::vector<Term> terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);   // Koszul signs included
Poly operator*(const Rational& c, const Poly& p);
Poly operator-(const Poly& p);

// c * m * p for a single monomial m (the common case when building
// multiplier rows; avoids wrapping m in a Poly).
Poly mono_mul(const Monomial& m, const Rational& c, const Poly& p);

// p^e by repeated multiplication (e >= 0; p^0 = 1).
Poly poly_pow(const Poly& p, std::uint32_t e);

// x_id^e as a polynomial.
Poly even_power_poly(GeneratorTable gens, std::uint32_t id, std::uint32_t e);

// Rendering, e.g. "x1^2 + 2*x1*x2 - 1/3*y1_2".
std::string poly_to_string(const Poly& p, GeneratorTable gens);

}  // namespace ehk
