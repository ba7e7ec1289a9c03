#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace orthotrend {

/// n x N observation matrix with one label per column. Stored row-major so
/// the pair kernel reads each observation contiguously.
///
/// Invariants (checked on construction): n >= 2, 2 <= N <= 16, every value
/// finite, labels nonempty and unique.
class Dataset {
 public:
  /// `values` is row-major, size rows * labels.size().
  /// Throws DimensionError or ValidationError.
  Dataset(std::vector<std::string> labels, std::vector<double> values);

  /// Column-major convenience constructor: columns[k] is variable k.
  static Dataset from_columns(std::vector<std::string> labels,
                              const std::vector<std::vector<double>>& columns);

  /// Same, labelled S1..SN.
  static Dataset from_columns(const std::vector<std::vector<double>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  int dimension() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const double> values() const noexcept { return values_; }

  std::span<const double> row(std::size_t r) const noexcept {
    return std::span<const double>(values_).subspan(r * labels_.size(), labels_.size());
  }
  double at(std::size_t r, int k) const noexcept {
    return values_[r * labels_.size() + static_cast<std::size_t>(k)];
  }
  std::vector<double> column(int k) const;

  /// Indices of columns whose values are all equal.
  std::vector<int> constant_columns() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
  std::size_t rows_;
};

/// "S1".."Sn".
std::vector<std::string> default_labels(int dimension);

}  // namespace orthotrend
