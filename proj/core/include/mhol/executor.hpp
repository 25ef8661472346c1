#pragma once

#include <cstddef>
#include <functional>

namespace mhol {

// Library code never spawns threads itself; callers hand in an executor.
class Executor {
 public:
  virtual ~Executor() = default;
  // Runs body(i) for every i in [0, count). Blocks until all calls return.
  // The first exception thrown by any call is rethrown after the join.
  virtual void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) const = 0;
  virtual std::size_t width() const noexcept = 0;
};

class SequentialExecutor final : public Executor {
 public:
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) const override;
  std::size_t width() const noexcept override { return 1; }
};

class ThreadPoolExecutor final : public Executor {
 public:
  explicit ThreadPoolExecutor(std::size_t threads);
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) const override;
  std::size_t width() const noexcept override { return threads_; }

 private:
  std::size_t threads_;
};

// Returns `exec` or a process-wide sequential executor when null.
const Executor& executor_or_default(const Executor* exec);

}  // namespace mhol
