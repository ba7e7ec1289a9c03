#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orthotrend {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 16;

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

/// Throws DimensionError unless kMinDimension <= n <= kMaxDimension.
void check_dimension(int n);

/// Number of paired orthants (data trends) for dimension n: 2^(n-1).
constexpr std::uint32_t trend_count(int n) { return std::uint32_t{1} << (n - 1); }

/// A strict sign vector over N variables, stored as a bitmask where bit k is
/// set iff variable k has a plus sign.
class SignPattern {
 public:
  /// Throws DimensionError for bad n, std::invalid_argument if mask has bits >= n.
  SignPattern(int dimension, std::uint32_t mask);

  /// Throws std::invalid_argument if any entry is Sign::zero.
  static SignPattern from_signs(std::span<const Sign> signs);

  int dimension() const noexcept { return dimension_; }
  std::uint32_t mask() const noexcept { return mask_; }
  Sign operator[](int k) const noexcept { return (mask_ >> k) & 1U ? Sign::plus : Sign::minus; }
  std::vector<Sign> signs() const;
  SignPattern negated() const noexcept;

  /// "+-+" style rendering, variable 0 first.
  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  SignPattern(int dimension, std::uint32_t mask, std::nullptr_t) noexcept
      : dimension_(dimension), mask_(mask) {}

  int dimension_;
  std::uint32_t mask_;
};

/// Bit k set iff signs[k] is plus.
inline std::uint32_t pattern_bitmask(const SignPattern& p) noexcept { return p.mask(); }
SignPattern pattern_from_bitmask(int dimension, std::uint32_t mask);

/// {canonical, negation(canonical)}, canonical always has variable 0 = plus.
struct PairedOrthant {
  SignPattern canonical;
  std::uint32_t index;

  SignPattern negation() const noexcept { return canonical.negated(); }
  /// "canonical/negation", e.g. "+-+/-+-".
  std::string label() const;

  friend bool operator==(const PairedOrthant&, const PairedOrthant&) = default;
};

enum class Orientation : std::uint8_t { canonical, negated };

struct Canonical {
  std::uint32_t index;
  Orientation orientation;

  friend bool operator==(const Canonical&, const Canonical&) = default;
};

/// Hot-path form used by the pair kernels. `mask` must fit in `dimension` bits.
constexpr Canonical canonicalize_mask(std::uint32_t mask, int dimension) noexcept {
  if (mask & 1U) return {mask >> 1, Orientation::canonical};
  const std::uint32_t full = (dimension == 32) ? ~0U : ((std::uint32_t{1} << dimension) - 1U);
  return {((~mask) & full) >> 1, Orientation::negated};
}

inline Canonical canonicalize(const SignPattern& raw) noexcept {
  return canonicalize_mask(raw.mask(), raw.dimension());
}

/// Paired orthant with the given index; throws std::out_of_range if index >= trend_count.
PairedOrthant paired_orthant(int dimension, std::uint32_t index);

/// All 2^(N-1) paired orthants, ascending by index (the trailing N-1 bits of
/// the canonical mask). Throws DimensionError outside [2, 16].
std::vector<PairedOrthant> enumerate_paired_orthants(int dimension);

}  // namespace orthotrend
