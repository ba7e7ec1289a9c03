#include "orthotrend/permutation.hpp"

#include <cmath>
#include <stdexcept>

#include "orthotrend/delta.hpp"
#include "orthotrend/iota.hpp"
#include "orthotrend/rng.hpp"

namespace orthotrend {

namespace {

// Relative slack so that a replicate reproducing the observed iota counts as
// "at least as extreme" despite rounding in the log-domain evaluation.
constexpr double kExtremeSlack = 1e-12;

}  // namespace

std::vector<double> permutation_null_all(const Dataset& data, std::uint32_t replicates,
                                         std::uint64_t seed) {
  if (replicates < kMinReplicates) {
    throw std::invalid_argument("permutation test needs at least " +
                                std::to_string(kMinReplicates) + " replicates");
  }
  const auto observed = iota_from_deltas(compute_deltas(data));
  const std::size_t trends = observed.size();
  std::vector<double> threshold(trends);
  for (std::size_t t = 0; t < trends; ++t) {
    threshold[t] = std::abs(observed[t]) * (1.0 - kExtremeSlack) - kExtremeSlack;
  }

  const std::size_t n = data.rows();
  const int dim = data.dimension();
  std::vector<std::uint64_t> exceed(trends, 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(trends, 0);
    std::vector<std::vector<double>> columns(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) columns[static_cast<std::size_t>(k)] = data.column(k);
    std::vector<double> values(n * static_cast<std::size_t>(dim));

#pragma omp for schedule(static) nowait
    for (std::uint32_t r = 0; r < replicates; ++r) {
      auto rng = SplitMix64::stream(seed, r);
      for (int k = 1; k < dim; ++k) {
        auto& col = columns[static_cast<std::size_t>(k)];
        // Restart from the observed order so each replicate depends only on (seed, r).
        col = data.column(k);
        shuffle(std::span<double>(col), rng);
      }
      for (std::size_t row = 0; row < n; ++row) {
        for (int k = 0; k < dim; ++k) {
          values[row * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)] =
              columns[static_cast<std::size_t>(k)][row];
        }
      }
      const Dataset shuffled(data.labels(), values);
      auto tally = tally_pairs_serial(shuffled);
      const DeltaVector replicate(dim, std::move(tally.counts), tally.tied);
      if (replicate.effective_pairs() == 0) {
        // No defined iota; count as extreme for every trend (conservative).
        for (auto& c : local) ++c;
        continue;
      }
      const auto iotas = iota_from_deltas(replicate);
      for (std::size_t t = 0; t < trends; ++t) {
        if (std::abs(iotas[t]) >= threshold[t]) ++local[t];
      }
    }

#pragma omp critical(orthotrend_permutation_merge)
    for (std::size_t t = 0; t < trends; ++t) exceed[t] += local[t];
  }

  std::vector<double> p(trends);
  for (std::size_t t = 0; t < trends; ++t) {
    p[t] = static_cast<double>(1 + exceed[t]) / static_cast<double>(replicates + 1);
  }
  return p;
}

double permutation_null(const Dataset& data, std::uint32_t trend, std::uint32_t replicates,
                        std::uint64_t seed) {
  if (trend >= trend_count(data.dimension())) {
    throw std::invalid_argument("trend index out of range");
  }
  return permutation_null_all(data, replicates, seed)[trend];
}

}  // namespace orthotrend
