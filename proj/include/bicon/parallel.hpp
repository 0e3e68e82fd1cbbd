#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bicon {

inline unsigned default_jobs() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

// Splits [0, count) into fixed-size chunks, maps each chunk on a pool of
// `jobs` threads, then folds the chunk results left to right. Chunk
// boundaries do not depend on `jobs`, so with an associative `merge` the
// result is identical for every worker count.
template <typename T, typename Map, typename Merge>
T parallel_reduce(std::uint64_t count, unsigned jobs, T identity, Map map, Merge merge,
                  std::uint64_t chunk_size = 4096) {
  if (count == 0) return identity;
  const std::uint64_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<T> partial(chunks, identity);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks || failed.load()) return;
      try {
        const std::uint64_t begin = c * chunk_size;
        partial[c] = map(begin, std::min(count, begin + chunk_size));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || chunks == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  T acc = std::move(identity);
  for (T& p : partial) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace bicon
