#include "orthotrend/iota.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "orthotrend/permutation.hpp"

namespace orthotrend {

double reliable_point(int dimension) {
  check_dimension(dimension);
  return 2.0 / std::ldexp(1.0, dimension);
}

double sigma_null(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sigma_null needs n >= 2");
  const double nd = static_cast<double>(n);
  return std::sqrt(2.0 * (2.0 * nd + 5.0) / (9.0 * nd * (nd - 1.0)));
}

double z_statistic(double iota, std::size_t n) { return iota / sigma_null(n); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double p_two_sided(double z) {
  const double p = std::erfc(std::abs(z) / std::numbers::sqrt2);
  return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

namespace {

// iota for each distinct value; `values` sorted ascending with multiplicities.
// `advantage(a, b)` returns a - b as a double, `zero_factor(a, b)` tells whether
// 1 + (a - b) is exactly zero.
template <class Value, class Advantage, class ZeroFactor>
std::vector<double> iota_over_distinct(const std::vector<Value>& values,
                                       const std::vector<std::size_t>& multiplicity,
                                       std::size_t total, Advantage advantage,
                                       ZeroFactor zero_factor) {
  const std::size_t distinct = values.size();
  const double exponent = 1.0 / static_cast<double>(total - 1);
  std::vector<double> out(distinct);

#pragma omp parallel for schedule(static) if (distinct >= 512)
  for (std::size_t a = 0; a < distinct; ++a) {
    bool zero = false;
    double log_sum = 0.0;
    for (std::size_t b = 0; b < distinct && !zero; ++b) {
      const std::size_t reps = (a == b) ? multiplicity[b] - 1 : multiplicity[b];
      if (reps == 0) continue;
      if (zero_factor(values[a], values[b])) {
        zero = true;
        break;
      }
      log_sum += static_cast<double>(reps) * std::log1p(advantage(values[a], values[b]));
    }
    out[a] = zero ? -1.0 : std::expm1(log_sum * exponent);
  }
  return out;
}

template <class Value>
void group(std::span<const Value> input, std::vector<Value>& values,
           std::vector<std::size_t>& multiplicity) {
  std::map<Value, std::size_t> counts;
  for (const Value& v : input) ++counts[v];
  for (const auto& [v, c] : counts) {
    values.push_back(v);
    multiplicity.push_back(c);
  }
}

template <class Value>
std::vector<double> scatter(std::span<const Value> input, const std::vector<Value>& values,
                            const std::vector<double>& per_value) {
  std::vector<double> out(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto it = std::lower_bound(values.begin(), values.end(), input[i]);
    out[i] = per_value[static_cast<std::size_t>(it - values.begin())];
  }
  return out;
}

}  // namespace

std::vector<double> iota_from_deltas(std::span<const double> deltas) {
  if (deltas.size() < 2) throw std::invalid_argument("iota needs at least two trends");
  std::vector<double> values;
  std::vector<std::size_t> multiplicity;
  group(deltas, values, multiplicity);
  const auto per_value = iota_over_distinct(
      values, multiplicity, deltas.size(), [](double a, double b) { return a - b; },
      [](double a, double b) { return 1.0 + (a - b) == 0.0; });
  return scatter(deltas, values, per_value);
}

std::vector<double> iota_from_deltas(const DeltaVector& deltas) {
  if (deltas.effective_pairs() == 0) throw std::invalid_argument("iota needs m > 0");
  const auto m = deltas.effective_pairs();
  const double md = static_cast<double>(m);
  std::span<const std::uint64_t> counts(deltas.counts());
  std::vector<std::uint64_t> values;
  std::vector<std::size_t> multiplicity;
  group(counts, values, multiplicity);
  const auto per_value = iota_over_distinct(
      values, multiplicity, counts.size(),
      [md](std::uint64_t a, std::uint64_t b) {
        return (static_cast<double>(a) - static_cast<double>(b)) / md;
      },
      [m](std::uint64_t a, std::uint64_t b) { return a == 0 && b == m; });
  return scatter(counts, values, per_value);
}

TrendReport analyze(const Dataset& data, std::optional<PermutationSettings> permutation) {
  const DeltaVector dv = compute_deltas(data);
  const auto iotas = iota_from_deltas(dv);

  TrendReport report;
  report.n = data.rows();
  report.dimension = data.dimension();
  report.columns = data.labels();
  report.reliable_point = reliable_point(data.dimension());
  report.effective_pairs = dv.effective_pairs();
  report.tied_pairs = dv.tied_pairs();
  report.sigma = sigma_null(data.rows());
  report.permutation = permutation;

  const auto trends = enumerate_paired_orthants(data.dimension());
  report.entries.reserve(trends.size());
  for (std::size_t t = 0; t < trends.size(); ++t) {
    TrendEntry e{trends[t]};
    e.count = dv.counts()[t];
    e.delta = dv.delta(t);
    e.iota = iotas[t];
    e.z = e.iota / report.sigma;
    e.p = p_two_sided(e.z);
    report.entries.push_back(std::move(e));
  }

  if (permutation) {
    const auto perm_p = permutation_null_all(data, permutation->replicates, permutation->seed);
    for (std::size_t t = 0; t < trends.size(); ++t) report.entries[t].permutation_p = perm_p[t];
  }
  return report;
}

}  // namespace orthotrend
