#pragma once

#include <gmpxx.h>

#include <string>

namespace ehk {

// Exact arbitrary-precision arithmetic.  mpq_class values are kept canonical
// (fully reduced, positive denominator) by GMP itself; every coefficient in
// this library is one of these.  No floating point appears anywhere in the
// mathematical core.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after normalization).  Throws ParseError
// on anything else, including "1/0".
Rational rational_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
// rational_from_string(rational_to_string(x)) == x for all x.
std::string rational_to_string(const Rational& value);

}  // namespace ehk
