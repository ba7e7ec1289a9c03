#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orthotrend/dataset.hpp"
#include "orthotrend/sign_pattern.hpp"

namespace orthotrend {

/// Componentwise sgn(later[k] - earlier[k]).
std::vector<Sign> sign_diff(std::span<const double> later, std::span<const double> earlier);

/// Paired-orthant index of the pair, or nullopt when any coordinate is tied.
/// Orientation is discarded: a pair and its reverse count toward the same trend.
std::optional<std::uint32_t> classify_pair(std::span<const double> later,
                                           std::span<const double> earlier);

/// Raw kernel output: untied pairs per paired orthant, plus the tied count.
struct PairTally {
  std::vector<std::uint64_t> counts;
  std::uint64_t tied = 0;
};

/// Individual trend coefficients held as exact ratios counts[t] / m.
class DeltaVector {
 public:
  DeltaVector(int dimension, std::vector<std::uint64_t> counts, std::uint64_t tied_pairs);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return counts_.size(); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t effective_pairs() const noexcept { return effective_; }
  std::uint64_t tied_pairs() const noexcept { return tied_; }
  std::uint64_t total_pairs() const noexcept { return effective_ + tied_; }

  /// counts[t] / m; 0 when m == 0.
  double delta(std::size_t t) const noexcept;
  std::vector<double> deltas() const;

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;

 private:
  int dimension_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t effective_;
  std::uint64_t tied_;
};

/// Pair classification in the textbook order: j = 1..n-1 outer, i = 0..j-1
/// inner, one sign_diff per pair. Kept as the reference for the fast kernels.
PairTally tally_pairs_reference(const Dataset& data);

/// Bitmask kernel, single thread.
PairTally tally_pairs_serial(const Dataset& data);

/// Bitmask kernel, OpenMP over the outer row. Per-thread tallies are merged
/// by integer addition, so the result is identical for any thread count.
/// `threads` <= 0 uses the OpenMP default.
PairTally tally_pairs_parallel(const Dataset& data, int threads = 0);

/// Wraps a tally; throws DegenerateDatasetError when every pair is tied.
DeltaVector to_delta_vector(const Dataset& data, PairTally tally);

/// Production entry point (parallel kernel). Throws DegenerateDatasetError
/// when the dataset has constant columns or m == 0.
DeltaVector compute_deltas(const Dataset& data);

/// Reference entry point (textbook loop order, no bit tricks in the loop).
DeltaVector compute_deltas_reference(const Dataset& data);

}  // namespace orthotrend
