#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthotrend/dataset.hpp"
#include "orthotrend/delta.hpp"
#include "orthotrend/sign_pattern.hpp"

namespace orthotrend {

/// 2 / 2^N, the value every delta takes under independence.
double reliable_point(int dimension);

/// Null standard deviation sqrt(2(2n+5) / (9n(n-1))). Throws for n < 2.
double sigma_null(std::size_t n);

double z_statistic(double iota, std::size_t n);

/// Standard normal CDF.
double normal_cdf(double x);

/// 2 * Phi(-|z|), clamped below at the smallest normal double so it stays in (0, 1].
double p_two_sided(double z);

/// Global coefficients from individual ones:
///   iota_i = [prod_{j != i} (1 + (delta_i - delta_j))]^(1/(T-1)) - 1
/// evaluated in log space; a zero factor yields exactly -1.
/// Requires deltas.size() >= 2.
std::vector<double> iota_from_deltas(std::span<const double> deltas);

/// Same, with the factors formed from exact count differences.
std::vector<double> iota_from_deltas(const DeltaVector& deltas);

struct TrendEntry {
  explicit TrendEntry(PairedOrthant t) : trend(std::move(t)) {}

  PairedOrthant trend;
  std::uint64_t count = 0;
  double delta = 0.0;
  double iota = 0.0;
  double z = 0.0;
  double p = 1.0;
  std::optional<double> permutation_p;

  friend bool operator==(const TrendEntry&, const TrendEntry&) = default;
};

struct PermutationSettings {
  std::uint32_t replicates = 999;
  std::uint64_t seed = 0;

  friend bool operator==(const PermutationSettings&, const PermutationSettings&) = default;
};

struct TrendReport {
  std::size_t n = 0;
  int dimension = 0;
  std::vector<std::string> columns;
  double reliable_point = 0.0;
  std::uint64_t effective_pairs = 0;
  std::uint64_t tied_pairs = 0;
  double sigma = 0.0;
  std::optional<PermutationSettings> permutation;
  std::vector<TrendEntry> entries;

  friend bool operator==(const TrendReport&, const TrendReport&) = default;
};

/// Deltas, iota, Z and p for every paired orthant; permutation p values too
/// when `permutation` is set.
TrendReport analyze(const Dataset& data,
                    std::optional<PermutationSettings> permutation = std::nullopt);

}  // namespace orthotrend
