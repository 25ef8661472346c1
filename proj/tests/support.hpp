#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mhol/catalog.hpp"
#include "mhol/multiple_holomorph.hpp"

namespace mhol::test {

inline GroupPtr corpus(const std::string& name) {
  for (const auto& e : load_catalog(MHOL_TEST_CATALOG)) {
    if (e.name == name) return load_entry(e).group;
  }
  throw InputError("no corpus entry " + name);
}

// Pipeline results are shared across tests in one binary.
inline const Analysis& analysis(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Analysis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Analysis>(analyze(corpus(name)));
  return *slot;
}

}  // namespace mhol::test
