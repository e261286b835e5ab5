#include "ehk/generator.hpp"

#include "ehk/errors.hpp"

namespace ehk {

Generator make_generator(std::uint32_t id, std::string name,
                         std::uint32_t degree, Parity parity) {
  if (degree == 0)
    throw StructuralError("generator '" + name + "': degree must be >= 1");
  const Parity expected = (degree % 2 == 0) ? Parity::even : Parity::odd;
  if (parity != expected)
    throw StructuralError("generator '" + name + "': parity does not match degree " +
                          std::to_string(degree));
  return Generator{id, std::move(name), degree, parity};
}

Generator make_generator(std::uint32_t id, std::string name,
                         std::uint32_t degree) {
  const Parity parity = (degree % 2 == 0) ? Parity::even : Parity::odd;
  return make_generator(id, std::move(name), degree, parity);
}

}  // namespace ehk
