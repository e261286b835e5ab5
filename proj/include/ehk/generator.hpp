#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ehk {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

// One free generator of a graded-commutative algebra.  `id` is the index in
// the owning model's generator list; the canonical generator order is by id.
struct Generator {
  std::uint32_t id = 0;
  std::string name;
  std::uint32_t degree = 0;
  Parity parity = Parity::even;
};

using GeneratorTable = std::span<const Generator>;

// Validates degree >= 1 and parity(degree) == parity; throws StructuralError
// otherwise.  Degree-1 generators are representable (the validator reports
// them as breaking simple connectivity) but degree 0 is not.
Generator make_generator(std::uint32_t id, std::string name,
                         std::uint32_t degree, Parity parity);

// Same, with the parity read off the degree.
Generator make_generator(std::uint32_t id, std::string name,
                         std::uint32_t degree);

inline bool is_even(const Generator& g) { return g.parity == Parity::even; }

}  // namespace ehk
