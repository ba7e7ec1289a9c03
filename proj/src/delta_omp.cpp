#include <omp.h>

#include "orthotrend/delta.hpp"
#include "pair_mask.hpp"

namespace orthotrend {

namespace {
// Below this many rows the fork/join cost outweighs the O(n^2) loop.
constexpr std::size_t kParallelMinRows = 384;
}  // namespace

PairTally tally_pairs_parallel(const Dataset& data, int threads) {
  const int dim = data.dimension();
  const std::size_t n = data.rows();
  const std::size_t trends = trend_count(dim);
  const double* values = data.values().data();
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

  PairTally total;
  total.counts.assign(trends, 0);

#pragma omp parallel num_threads(nthreads) if (n >= kParallelMinRows)
  {
    std::vector<std::uint64_t> local(trends, 0);
    std::uint64_t local_tied = 0;

    // Row j carries j pairs; dynamic chunks keep the triangle balanced.
#pragma omp for schedule(dynamic, 16) nowait
    for (std::size_t j = 1; j < n; ++j) {
      const double* later = values + j * static_cast<std::size_t>(dim);
      for (std::size_t i = 0; i < j; ++i) {
        const auto pm = detail::pair_mask(later, values + i * static_cast<std::size_t>(dim), dim);
        if (pm.tied) {
          ++local_tied;
        } else {
          ++local[canonicalize_mask(pm.plus, dim).index];
        }
      }
    }

#pragma omp critical(orthotrend_tally_merge)
    {
      for (std::size_t t = 0; t < trends; ++t) total.counts[t] += local[t];
      total.tied += local_tied;
    }
  }
  return total;
}

}  // namespace orthotrend
