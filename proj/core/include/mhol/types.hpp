#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mhol {

// Dense element index. The identity of every group is index 0.
using Elem = std::uint32_t;

inline constexpr Elem kIdentity = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad group tables, bad files, unknown names.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured cap or search budget was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An invariant that must hold by construction did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

struct Caps {
  std::size_t max_aut = 20000;
  std::size_t max_hol = 200000;
  // Largest group whose full Cayley table may be materialized.
  std::size_t max_table = 4096;
  // Up to this order associativity is checked on all triples.
  std::size_t full_assoc_order = 512;
  std::uint64_t budget = 10'000'000;
};

// Thread-safe step counter shared by one enumeration.
class Budget {
 public:
  explicit Budget(std::uint64_t limit, std::string what = "enumeration");
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::uint64_t limit_;
  std::string what_;
};

inline void charge(Budget* budget, std::uint64_t steps = 1) {
  if (budget != nullptr) budget->charge(steps);
}

}  // namespace mhol
