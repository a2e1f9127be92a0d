#ifndef PEDIGREE_PARALLEL_HPP
#define PEDIGREE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pedigree {

/// Worker cap from PEDIGREE_THREADS, else the number of logical cores.
inline unsigned worker_count() {
  if (const char* env = std::getenv("PEDIGREE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, tasks) into a fixed number of contiguous blocks, evaluates
/// `work(begin, end)` for each block on up to worker_count() threads, and
/// folds the partial results in block order. The block layout does not
/// depend on the thread count, so results are reproducible.
template <class Partial, class Work, class Fold>
Partial parallel_reduce(std::size_t tasks, Partial init, Work&& work, Fold&& fold,
                        std::size_t max_blocks = 256) {
  const std::size_t blocks = std::max<std::size_t>(1, std::min(tasks, max_blocks));
  std::vector<Partial> partials(blocks, init);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < blocks;) {
      const std::size_t begin = tasks * b / blocks;
      const std::size_t end = tasks * (b + 1) / blocks;
      try {
        partials[b] = work(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(worker_count(), blocks);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Partial total = init;
  for (auto& p : partials) total = fold(std::move(total), std::move(p));
  return total;
}

}  // namespace pedigree

#endif  // PEDIGREE_PARALLEL_HPP
