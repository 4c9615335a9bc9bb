#include <atomic>
#include <cassert>

#include "gomega/kernels.hpp"
#include "image_rule.hpp"

namespace gomega::kernels {

namespace {
std::atomic<Policy> g_policy{Policy::parallel};
}

Policy default_policy() { return g_policy.load(); }
void set_default_policy(Policy p) { g_policy.store(p); }

void generator_images_serial(SigmaMask mask, unsigned depth,
                             std::span<std::uint32_t> out) {
  assert(out.size() == (std::size_t{1} << depth));
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = detail::image_of(mask, depth, static_cast<std::uint32_t>(x));
}

void compose_serial(std::span<const std::uint32_t> outer,
                    std::span<const std::uint32_t> inner,
                    std::span<std::uint32_t> out) {
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = outer[inner[x]];
}

void csr_apply_serial(CsrView a, std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) {
  const std::size_t rows = a.row_ptr.size() - 1;
  for (std::size_t r = 0; r < rows; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
      acc += a.values[k] * in[a.cols[k]];
    out[r] = acc;
  }
}

}  // namespace gomega::kernels
