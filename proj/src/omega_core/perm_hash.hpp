#pragma once

#include <cstdint>
#include <vector>

namespace gomega::detail {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace gomega::detail
