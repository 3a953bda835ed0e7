#include "scrminer/error.hpp"

namespace scrminer {

CapExceeded::CapExceeded(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error("exhaustive enumeration needs " + std::to_string(required) +
                         " condsets, above the cap of " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

}  // namespace scrminer
