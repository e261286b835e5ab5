#include "ehk/config.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "ehk/errors.hpp"

namespace ehk {

namespace {

// Parses a positive decimal environment value; rejects junk loudly rather
// than running with a cap the user did not ask for.
unsigned long long env_positive(const char* name, unsigned long long fallback,
                                unsigned long long hard_max) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string s(raw);
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos, 10);
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + ": not a positive integer: '" + s + "'");
  }
  if (pos != s.size() || v == 0 || v > hard_max)
    throw ParseError(std::string(name) + ": out of range: '" + s + "'");
  return v;
}

}  // namespace

Config Config::from_env() {
  Config cfg;
  cfg.max_slice_dim = static_cast<std::size_t>(env_positive(
      "EHK_MAX_SLICE_DIM", cfg.max_slice_dim, 1ull << 40));
  cfg.max_degree = static_cast<std::uint32_t>(env_positive(
      "EHK_MAX_DEGREE", cfg.max_degree,
      std::numeric_limits<std::uint32_t>::max()));
  return cfg;
}

}  // namespace ehk
