#include <numeric>
#include <string>

#include "orthotrend/delta.hpp"
#include "orthotrend/errors.hpp"
#include "pair_mask.hpp"

namespace orthotrend {

std::vector<Sign> sign_diff(std::span<const double> later, std::span<const double> earlier) {
  std::vector<Sign> out(later.size());
  for (std::size_t k = 0; k < later.size(); ++k) {
    if (later[k] > earlier[k]) {
      out[k] = Sign::plus;
    } else if (later[k] < earlier[k]) {
      out[k] = Sign::minus;
    } else {
      out[k] = Sign::zero;
    }
  }
  return out;
}

std::optional<std::uint32_t> classify_pair(std::span<const double> later,
                                           std::span<const double> earlier) {
  const auto signs = sign_diff(later, earlier);
  for (Sign s : signs) {
    if (s == Sign::zero) return std::nullopt;
  }
  return canonicalize(SignPattern::from_signs(signs)).index;
}

DeltaVector::DeltaVector(int dimension, std::vector<std::uint64_t> counts, std::uint64_t tied_pairs)
    : dimension_(dimension), counts_(std::move(counts)), effective_(0), tied_(tied_pairs) {
  check_dimension(dimension);
  if (counts_.size() != trend_count(dimension)) {
    throw std::invalid_argument("count vector length does not match 2^(N-1)");
  }
  effective_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

double DeltaVector::delta(std::size_t t) const noexcept {
  if (effective_ == 0) return 0.0;
  return static_cast<double>(counts_[t]) / static_cast<double>(effective_);
}

std::vector<double> DeltaVector::deltas() const {
  std::vector<double> out(counts_.size());
  for (std::size_t t = 0; t < counts_.size(); ++t) out[t] = delta(t);
  return out;
}

PairTally tally_pairs_reference(const Dataset& data) {
  PairTally tally;
  tally.counts.assign(trend_count(data.dimension()), 0);
  const std::size_t n = data.rows();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (const auto trend = classify_pair(data.row(j), data.row(i))) {
        ++tally.counts[*trend];
      } else {
        ++tally.tied;
      }
    }
  }
  return tally;
}

PairTally tally_pairs_serial(const Dataset& data) {
  const int dim = data.dimension();
  const std::size_t n = data.rows();
  const double* values = data.values().data();
  PairTally tally;
  tally.counts.assign(trend_count(dim), 0);
  for (std::size_t j = 1; j < n; ++j) {
    const double* later = values + j * static_cast<std::size_t>(dim);
    for (std::size_t i = 0; i < j; ++i) {
      const auto pm = detail::pair_mask(later, values + i * static_cast<std::size_t>(dim), dim);
      if (pm.tied) {
        ++tally.tied;
      } else {
        ++tally.counts[canonicalize_mask(pm.plus, dim).index];
      }
    }
  }
  return tally;
}

DeltaVector to_delta_vector(const Dataset& data, PairTally tally) {
  DeltaVector dv(data.dimension(), std::move(tally.counts), tally.tied);
  if (dv.effective_pairs() == 0) {
    std::vector<std::string> constant;
    for (int k : data.constant_columns()) constant.push_back(data.labels()[static_cast<std::size_t>(k)]);
    std::string msg = "degenerate dataset: every observation pair is tied in at least one column";
    if (!constant.empty()) {
      msg += "; constant columns:";
      for (const auto& c : constant) msg += " " + c;
    }
    throw DegenerateDatasetError(msg, std::move(constant));
  }
  return dv;
}

namespace {

void reject_constant_columns(const Dataset& data) {
  const auto constant = data.constant_columns();
  if (constant.empty()) return;
  std::vector<std::string> names;
  std::string msg = "degenerate dataset: constant columns:";
  for (int k : constant) {
    names.push_back(data.labels()[static_cast<std::size_t>(k)]);
    msg += " " + names.back();
  }
  throw DegenerateDatasetError(msg, std::move(names));
}

}  // namespace

DeltaVector compute_deltas(const Dataset& data) {
  reject_constant_columns(data);
  return to_delta_vector(data, tally_pairs_parallel(data));
}

DeltaVector compute_deltas_reference(const Dataset& data) {
  reject_constant_columns(data);
  return to_delta_vector(data, tally_pairs_reference(data));
}

}  // namespace orthotrend
