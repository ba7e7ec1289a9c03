#include "orthotrend/sign_pattern.hpp"

#include <stdexcept>

#include "orthotrend/errors.hpp"

namespace orthotrend {

void check_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw DimensionError("dimension must be between " + std::to_string(kMinDimension) + " and " +
                         std::to_string(kMaxDimension) + ", got " + std::to_string(n));
  }
}

SignPattern::SignPattern(int dimension, std::uint32_t mask) : dimension_(dimension), mask_(mask) {
  check_dimension(dimension);
  if (mask >> dimension) throw std::invalid_argument("sign mask has bits beyond the dimension");
}

SignPattern SignPattern::from_signs(std::span<const Sign> signs) {
  check_dimension(static_cast<int>(signs.size()));
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == Sign::zero) throw std::invalid_argument("sign pattern cannot contain zero");
    if (signs[k] == Sign::plus) mask |= std::uint32_t{1} << k;
  }
  return SignPattern(static_cast<int>(signs.size()), mask, nullptr);
}

std::vector<Sign> SignPattern::signs() const {
  std::vector<Sign> out(static_cast<std::size_t>(dimension_));
  for (int k = 0; k < dimension_; ++k) out[static_cast<std::size_t>(k)] = (*this)[k];
  return out;
}

SignPattern SignPattern::negated() const noexcept {
  const std::uint32_t full = (std::uint32_t{1} << dimension_) - 1U;
  return SignPattern(dimension_, ~mask_ & full, nullptr);
}

std::string SignPattern::to_string() const {
  std::string s(static_cast<std::size_t>(dimension_), '-');
  for (int k = 0; k < dimension_; ++k) {
    if ((mask_ >> k) & 1U) s[static_cast<std::size_t>(k)] = '+';
  }
  return s;
}

SignPattern pattern_from_bitmask(int dimension, std::uint32_t mask) {
  return SignPattern(dimension, mask);
}

std::string PairedOrthant::label() const {
  return canonical.to_string() + "/" + negation().to_string();
}

PairedOrthant paired_orthant(int dimension, std::uint32_t index) {
  check_dimension(dimension);
  if (index >= trend_count(dimension)) throw std::out_of_range("paired orthant index out of range");
  return PairedOrthant{SignPattern(dimension, (index << 1) | 1U), index};
}

std::vector<PairedOrthant> enumerate_paired_orthants(int dimension) {
  check_dimension(dimension);
  const std::uint32_t count = trend_count(dimension);
  std::vector<PairedOrthant> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    out.push_back(PairedOrthant{SignPattern(dimension, (i << 1) | 1U), i});
  }
  return out;
}

}  // namespace orthotrend
