#pragma once

#include <cstdint>

namespace orthotrend::detail {

struct PairMask {
  std::uint32_t plus;
  bool tied;
};

// Bit k of `plus` set iff later[k] > earlier[k]; `tied` iff any coordinate is equal.
inline PairMask pair_mask(const double* later, const double* earlier, int dim) noexcept {
  std::uint32_t plus = 0;
  std::uint32_t equal = 0;
  for (int k = 0; k < dim; ++k) {
    plus |= static_cast<std::uint32_t>(later[k] > earlier[k]) << k;
    equal |= static_cast<std::uint32_t>(later[k] == earlier[k]);
  }
  return {plus, equal != 0};
}

}  // namespace orthotrend::detail
