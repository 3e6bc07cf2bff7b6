#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace trustcal::par {

inline constexpr std::size_t kDefaultChunk = 8192;

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Deterministic chunked reduction: `make(begin, end)` computes a partial
// serially over one fixed-size chunk, and partials are folded in chunk order.
// The result is therefore independent of the number of threads.
template <typename Partial, typename MakePartial, typename Fold>
Partial chunk_reduce(std::size_t count, MakePartial&& make, Fold&& fold, Partial init,
                     std::size_t chunk_size = kDefaultChunk) {
  if (count == 0) return init;
  const std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
  if (n_chunks == 1) {
    return fold(std::move(init), make(std::size_t{0}, count));
  }
  std::vector<Partial> partials(n_chunks);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (long long ci = 0; ci < static_cast<long long>(n_chunks); ++ci) {
    const std::size_t begin = static_cast<std::size_t>(ci) * chunk_size;
    const std::size_t end = begin + chunk_size < count ? begin + chunk_size : count;
    partials[static_cast<std::size_t>(ci)] = make(begin, end);
  }
  Partial acc = std::move(init);
  for (auto& partial : partials) {
    acc = fold(std::move(acc), std::move(partial));
  }
  return acc;
}

}  // namespace trustcal::par
