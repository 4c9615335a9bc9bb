#pragma once

#include <bit>
#include <cstdint>

#include "gomega/kernels.hpp"

namespace gomega::kernels::detail {

// A vertex x_1...x_d lies in the subtree of w_n = 1^{n-1}0 exactly when its
// leading run of ones has length n-1, so at most one deep swap moves it.
inline std::uint32_t image_of(SigmaMask mask, unsigned depth, std::uint32_t x) {
  if (depth == 0) return x;
  if (mask.sigma[0]) return x ^ (std::uint32_t{1} << (depth - 1));
  const unsigned ones =
      static_cast<unsigned>(std::countl_one(x << (32 - depth)));
  const unsigned n = ones + 1;
  if (n >= depth || !mask.sigma[n]) return x;
  return x ^ (std::uint32_t{1} << (depth - 1 - n));
}

}  // namespace gomega::kernels::detail
