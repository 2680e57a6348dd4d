#pragma once

#include <vector>

#include "mulx/partition.hpp"

namespace mulx::test {

inline Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

inline Multipartition MP(std::vector<std::vector<int>> comps) {
  std::vector<Partition> out;
  out.reserve(comps.size());
  for (auto& c : comps) out.emplace_back(std::move(c));
  return Multipartition(std::move(out));
}

}  // namespace mulx::test
