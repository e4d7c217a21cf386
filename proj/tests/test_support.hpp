#pragma once
// Shared fixtures: group data is loaded once per test binary.

#include <map>
#include <string>

#include "cheralg/refgroup/groupdata.hpp"

namespace testsupport {

inline const cheralg::GroupData& group(const std::string& id) {
  static std::map<std::string, cheralg::GroupData> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, cheralg::load_group(id)).first;
  return it->second;
}

}  // namespace testsupport
