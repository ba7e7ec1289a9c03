#pragma once

#include <cstdint>
#include <vector>

#include "orthotrend/dataset.hpp"

namespace orthotrend {

inline constexpr std::uint32_t kMinReplicates = 99;

/// Empirical two-sided p value for one trend:
///   (1 + #{replicates with |iota*| >= |iota_observed|}) / (K + 1)
/// Each replicate shuffles every column except the first, drawing from the
/// SplitMix64 stream keyed by (seed, replicate index); the result does not
/// depend on thread count.
///
/// Throws std::invalid_argument for K < 99 or a bad trend index, and
/// DegenerateDatasetError when the observed data is degenerate.
double permutation_null(const Dataset& data, std::uint32_t trend, std::uint32_t replicates,
                        std::uint64_t seed);

/// Same replicates, evaluated for every trend at once.
std::vector<double> permutation_null_all(const Dataset& data, std::uint32_t replicates,
                                         std::uint64_t seed);

}  // namespace orthotrend
