#include "mhol/executor.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mhol {

void SequentialExecutor::parallel_for(std::size_t count,
                                      const std::function<void(std::size_t)>& body) const {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

ThreadPoolExecutor::ThreadPoolExecutor(std::size_t threads) : threads_(std::max<std::size_t>(1, threads)) {}

void ThreadPoolExecutor::parallel_for(std::size_t count,
                                      const std::function<void(std::size_t)>& body) const {
  const std::size_t workers = std::min(threads_, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (!failed.load(std::memory_order_relaxed)) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

const Executor& executor_or_default(const Executor* exec) {
  static const SequentialExecutor sequential;
  return exec != nullptr ? *exec : sequential;
}

}  // namespace mhol
