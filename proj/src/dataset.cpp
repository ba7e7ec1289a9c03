#include "orthotrend/dataset.hpp"

#include <cmath>
#include <set>

#include "orthotrend/errors.hpp"
#include "orthotrend/sign_pattern.hpp"

namespace orthotrend {

Dataset::Dataset(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)), rows_(0) {
  check_dimension(static_cast<int>(labels_.size()));
  const std::size_t width = labels_.size();
  if (values_.size() % width != 0) {
    throw ValidationError("value count " + std::to_string(values_.size()) +
                          " is not a multiple of the column count " + std::to_string(width));
  }
  rows_ = values_.size() / width;
  if (rows_ < 2) {
    throw ValidationError("need at least 2 observations, got " + std::to_string(rows_));
  }

  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw ValidationError("column labels must be nonempty");
    if (!seen.insert(label).second) throw ValidationError("duplicate column label '" + label + "'");
  }

  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("non-finite value at row " + std::to_string(i / width + 1) +
                            ", column '" + labels_[i % width] + "'");
    }
  }
}

Dataset Dataset::from_columns(std::vector<std::string> labels,
                              const std::vector<std::vector<double>>& columns) {
  if (labels.size() != columns.size()) {
    throw ValidationError("label count does not match column count");
  }
  check_dimension(static_cast<int>(columns.size()));
  const std::size_t n = columns.front().size();
  std::vector<double> values;
  values.reserve(n * columns.size());
  for (const auto& col : columns) {
    if (col.size() != n) throw ValidationError("columns have different lengths");
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& col : columns) values.push_back(col[r]);
  }
  return Dataset(std::move(labels), std::move(values));
}

Dataset Dataset::from_columns(const std::vector<std::vector<double>>& columns) {
  return from_columns(default_labels(static_cast<int>(columns.size())), columns);
}

std::vector<double> Dataset::column(int k) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, k);
  return out;
}

std::vector<int> Dataset::constant_columns() const {
  std::vector<int> out;
  for (int k = 0; k < dimension(); ++k) {
    bool constant = true;
    for (std::size_t r = 1; r < rows_ && constant; ++r) constant = at(r, k) == at(0, k);
    if (constant) out.push_back(k);
  }
  return out;
}

std::vector<std::string> default_labels(int dimension) {
  std::vector<std::string> out;
  for (int k = 1; k <= dimension; ++k) out.push_back("S" + std::to_string(k));
  return out;
}

}  // namespace orthotrend
