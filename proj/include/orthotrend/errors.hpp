#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthotrend {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension N outside [2, 16].
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input data that cannot form a valid Dataset (row count, labels, values).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV. Row and column are 1-based; column 0 means "whole row".
class ParseError : public Error {
 public:
  enum class Kind { syntax, encoding, non_numeric, missing_value, ragged_row, unknown_column };

  ParseError(Kind kind, const std::string& what, std::size_t row, std::size_t column)
      : Error(what), kind_(kind), row_(row), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t row_;
  std::size_t column_;
};

/// Every observation pair is tied in at least one coordinate.
class DegenerateDatasetError : public Error {
 public:
  DegenerateDatasetError(const std::string& what, std::vector<std::string> constant_columns)
      : Error(what), constant_columns_(std::move(constant_columns)) {}

  const std::vector<std::string>& constant_columns() const noexcept { return constant_columns_; }

 private:
  std::vector<std::string> constant_columns_;
};

}  // namespace orthotrend
