#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "cayconn/graph.hpp"

namespace cayconn::detail {

/// Runs task(state, part) for every part in [0, parts) on up to `workers`
/// threads. Each worker owns one state from make_state(). Results are
/// returned indexed by part, so any reduction over them in index order is
/// independent of the worker count.
template <class MakeState, class Task>
auto run_parts(std::size_t parts, unsigned workers, MakeState&& make_state, Task&& task) {
  using State = decltype(make_state());
  using Result = decltype(task(std::declval<State&>(), std::size_t{0}));
  std::vector<Result> results(parts);
  if (parts == 0) return results;
  const unsigned threads =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers ? workers : 1, parts)));
  if (threads == 1) {
    State state = make_state();
    for (std::size_t p = 0; p < parts; ++p) results[p] = task(state, p);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          State state = make_state();
          for (std::size_t p = next.fetch_add(1); p < parts; p = next.fetch_add(1)) {
            results[p] = task(state, p);
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(parts);
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return results;
}

/// Visits every k-subset of [0, universe) whose smallest element is `first`
/// in lexicographic order. visit(span) returns false to stop; the function
/// returns false when stopped early.
template <class Visit>
bool for_each_subset_from(std::uint32_t universe, std::size_t k, Vertex first, std::vector<Vertex>& buf,
                          Visit&& visit) {
  if (k == 0 || first >= universe) return true;
  buf.resize(k);
  buf[0] = first;
  const std::size_t rest = k - 1;
  if (rest == 0) return visit(std::span<const Vertex>(buf));
  if (universe - first - 1 < rest) return true;
  for (std::size_t i = 0; i < rest; ++i) buf[1 + i] = first + 1 + static_cast<Vertex>(i);
  while (true) {
    if (!visit(std::span<const Vertex>(buf))) return false;
    // Advance the rightmost element that can still move.
    std::size_t i = rest;
    while (i >= 1 && buf[i] == universe - (rest - i) - 1) --i;
    if (i == 0) return true;
    ++buf[i];
    for (std::size_t j = i + 1; j <= rest; ++j) buf[j] = buf[j - 1] + 1;
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// SplitMix64 finalizer; derives independent per-chunk seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace cayconn::detail
