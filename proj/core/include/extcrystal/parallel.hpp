#ifndef EXTCRYSTAL_PARALLEL_HPP
#define EXTCRYSTAL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace extcrystal {

struct CaseFailure {
  std::size_t index;
  std::string message;
};

/// Runs check(0) .. check(count - 1) over `jobs` workers and returns the
/// failure with the smallest index, so the outcome does not depend on the
/// worker count. `check` must be safe to call concurrently.
template <class Check>
std::optional<CaseFailure> first_failure(std::size_t count, int jobs, const Check& check) {
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                              std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> bound{std::numeric_limits<std::size_t>::max()};
  std::optional<CaseFailure> best;
  std::mutex best_mutex;

  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end && idx < bound.load(); ++idx) {
      std::optional<std::string> msg = check(idx);
      if (!msg) continue;
      std::lock_guard<std::mutex> lock(best_mutex);
      if (!best || idx < best->index) {
        best = CaseFailure{idx, std::move(*msg)};
        bound.store(idx);
      }
      return;
    }
  };

  if (workers == 1) {
    run(0, count);
    return best;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    threads.emplace_back(run, begin, std::min(count, begin + chunk));
  }
  for (auto& t : threads) t.join();
  return best;
}

}  // namespace extcrystal

#endif  // EXTCRYSTAL_PARALLEL_HPP
