#include <cassert>
#include <cstdint>

#include <omp.h>

#include "gomega/kernels.hpp"
#include "image_rule.hpp"

namespace gomega::kernels {

namespace {
// Below this many outputs the fork/join overhead dominates.
constexpr std::int64_t kMinParallel = 4096;
}

void generator_images_parallel(SigmaMask mask, unsigned depth,
                               std::span<std::uint32_t> out) {
  assert(out.size() == (std::size_t{1} << depth));
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallel)
  for (std::int64_t x = 0; x < n; ++x)
    out[x] = detail::image_of(mask, depth, static_cast<std::uint32_t>(x));
}

void compose_parallel(std::span<const std::uint32_t> outer,
                      std::span<const std::uint32_t> inner,
                      std::span<std::uint32_t> out) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallel)
  for (std::int64_t x = 0; x < n; ++x) out[x] = outer[inner[x]];
}

void csr_apply_parallel(CsrView a, std::span<const std::complex<double>> in,
                        std::span<std::complex<double>> out) {
  const auto rows = static_cast<std::int64_t>(a.row_ptr.size() - 1);
#pragma omp parallel for schedule(static) if (rows >= kMinParallel)
  for (std::int64_t r = 0; r < rows; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
      acc += a.values[k] * in[a.cols[k]];
    out[r] = acc;
  }
}

}  // namespace gomega::kernels
