#include "ehk/cyclotomic.hpp"

#include <map>

#include "ehk/errors.hpp"

namespace ehk {

namespace {

// Exact division of integer polynomials (low-to-high coefficients) where the
// divisor is monic and the division is known to be exact.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return {};
  if (den.empty() || den.back() != 1)
    throw StructuralError("polynomial division requires a monic divisor");
  if (num.size() < den.size())
    throw StructuralError("inexact polynomial division");
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Int c = num[i + den.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw StructuralError("inexact polynomial division");
  return quot;
}

// Phi_k by the recursive quotient formula, memoized.
const std::vector<Int>& cyclotomic_poly(std::uint32_t k) {
  static std::map<std::uint32_t, std::vector<Int>> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  // x^k - 1, low to high.
  std::vector<Int> num(k + 1, Int(0));
  num[0] = -1;
  num[k] = 1;
  for (std::uint32_t d = 1; d < k; ++d)
    if (k % d == 0) num = divide_exact(std::move(num), cyclotomic_poly(d));
  return cache.emplace(k, std::move(num)).first->second;
}

}  // namespace

Cyclotomic::Cyclotomic(std::uint32_t k) : k_(k) {
  if (k == 0) throw StructuralError("root order must be >= 1");
  phi_ = cyclotomic_poly(k);
}

Cyclotomic::Elt Cyclotomic::one() const {
  Elt e = zero();
  if (degree() == 0)
    throw StructuralError("degenerate cyclotomic field");
  e[0] = 1;
  return e;
}

Cyclotomic::Elt Cyclotomic::reduce(std::vector<Int> poly) const {
  const std::size_t d = degree();
  while (poly.size() > d) {
    const Int c = poly.back();
    const std::size_t shift = poly.size() - 1 - d;
    if (c != 0)
      for (std::size_t j = 0; j < d; ++j) poly[shift + j] -= c * phi_[j];
    poly.pop_back();
  }
  poly.resize(d, Int(0));
  return poly;
}

Cyclotomic::Elt Cyclotomic::root_power(std::uint64_t e) const {
  const std::uint64_t r = e % k_;
  std::vector<Int> poly(static_cast<std::size_t>(r) + 1, Int(0));
  poly[static_cast<std::size_t>(r)] = 1;
  return reduce(std::move(poly));
}

Cyclotomic::Elt Cyclotomic::add(const Elt& a, const Elt& b) const {
  Elt out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Cyclotomic::Elt Cyclotomic::mul(const Elt& a, const Elt& b) const {
  std::vector<Int> conv(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  return reduce(std::move(conv));
}

Cyclotomic::Elt Cyclotomic::scale(const Int& c, const Elt& a) const {
  Elt out = a;
  for (Int& v : out) v *= c;
  return out;
}

bool Cyclotomic::is_zero(const Elt& a) const {
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}

}  // namespace ehk
