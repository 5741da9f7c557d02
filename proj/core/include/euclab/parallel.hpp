#ifndef EUCLAB_PARALLEL_HPP
#define EUCLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace euclab {

/// Worker count: EUCLAB_THREADS if set and positive, otherwise the hardware
/// concurrency (at least 1).
std::size_t thread_count();

/// Splits [0, total) into fixed chunks, evaluates body(begin, end) -> T on a
/// worker pool and folds the partial results with combine in chunk order, so
/// the result does not depend on the number of threads.
template <class T, class Body, class Combine>
T parallel_chunks(std::uint64_t total, std::uint64_t chunk, T init, Body body, Combine combine) {
  if (total == 0) return init;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t nchunks = (total + chunk - 1) / chunk;
  std::vector<T> parts(nchunks, init);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < nchunks;) {
      try {
        const std::uint64_t begin = c * chunk;
        parts[c] = body(begin, std::min(total, begin + chunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(nchunks);
      }
    }
  };

  const std::size_t workers = std::min<std::uint64_t>(thread_count(), nchunks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  T acc = init;
  for (auto& p : parts) acc = combine(std::move(acc), p);
  return acc;
}

}  // namespace euclab

#endif  // EUCLAB_PARALLEL_HPP
