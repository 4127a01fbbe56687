#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace feceval {

// Applies fn to every element and returns results in input order regardless
// of the number of worker threads; the first worker exception is rethrown
// after all workers join.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn, unsigned jobs)
    -> std::vector<decltype(fn(inputs.front()))> {
  using Out = decltype(fn(inputs.front()));
  std::vector<Out> results(inputs.size());
  if (inputs.empty()) return results;
  if (jobs == 0) jobs = 1;
  if (jobs == 1 || inputs.size() == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) break;
      try {
        results[i] = fn(inputs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        break;
      }
    }
  };

  std::vector<std::thread> threads;
  const unsigned count = static_cast<unsigned>(
      std::min<std::size_t>(jobs, inputs.size()));
  threads.reserve(count);
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& thread : threads) thread.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace feceval
