#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace extremes {

// Smallest i in [0, count) for which the checker reports a failure.
//
// `make_checker()` is called once per worker and must return a callable
// `bool(std::uint64_t)`; each worker owns its checker, so checkers may keep
// mutable scratch state. The result does not depend on `jobs`: workers scan
// interleaved blocks and the coordinator keeps the minimum failing index.
template <class MakeChecker>
std::optional<std::uint64_t> first_failure(std::uint64_t count, unsigned jobs, MakeChecker make_checker) {
  constexpr std::uint64_t kBlock = 1024;
  if (jobs <= 1 || count <= kBlock) {
    auto fails = make_checker();
    for (std::uint64_t i = 0; i < count; ++i)
      if (fails(i)) return i;
    return std::nullopt;
  }

  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, blocks));
  std::atomic<std::uint64_t> best{count};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      auto fails = make_checker();
      for (std::uint64_t b = w; b < blocks; b += jobs) {
        const std::uint64_t lo = b * kBlock;
        if (lo >= best.load(std::memory_order_relaxed)) return;
        const std::uint64_t hi = std::min(count, lo + kBlock);
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (fails(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  const auto found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

}  // namespace extremes
