#include "mhol/types.hpp"

namespace mhol {

Budget::Budget(std::uint64_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}

void Budget::charge(std::uint64_t steps) {
  const auto total = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
  if (total > limit_) {
    throw BudgetExceeded("enumeration budget exceeded: " + what_ + " used more than " +
                         std::to_string(limit_) + " steps");
  }
}

}  // namespace mhol
