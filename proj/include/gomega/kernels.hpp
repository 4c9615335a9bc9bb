#pragma once

// Data-parallel inner loops. Every kernel has a serial reference
// implementation and an OpenMP implementation with identical results: all
// parallel loops partition the output index space, and each output entry is
// accumulated in the same fixed order as in the serial version, so the
// parallel kernels are bit-reproducible.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace gomega::kernels {

enum class Policy { serial, parallel };

/// Factors of one generator at a given depth: `sigma[n]` is nonzero iff the
/// branch swap at 1^{n-1}0 (n >= 1), or at the root (n = 0), is a factor.
/// The root swap must not be combined with deeper swaps.
struct SigmaMask {
  std::span<const std::uint8_t> sigma;
};

/// Image of every level-`depth` vertex (lexicographic index, first letter
/// in the most significant bit) under the generator described by `mask`.
void generator_images_serial(SigmaMask mask, unsigned depth,
                             std::span<std::uint32_t> out);
void generator_images_parallel(SigmaMask mask, unsigned depth,
                               std::span<std::uint32_t> out);

/// out[x] = outer[inner[x]]: apply `inner` first, then `outer`.
void compose_serial(std::span<const std::uint32_t> outer,
                    std::span<const std::uint32_t> inner,
                    std::span<std::uint32_t> out);
void compose_parallel(std::span<const std::uint32_t> outer,
                      std::span<const std::uint32_t> inner,
                      std::span<std::uint32_t> out);

/// Compressed sparse rows, complex values.
struct CsrView {
  std::span<const std::size_t> row_ptr;
  std::span<const std::uint32_t> cols;
  std::span<const std::complex<double>> values;
};

void csr_apply_serial(CsrView a, std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out);
void csr_apply_parallel(CsrView a, std::span<const std::complex<double>> in,
                        std::span<std::complex<double>> out);

inline void generator_images(Policy p, SigmaMask mask, unsigned depth,
                             std::span<std::uint32_t> out) {
  if (p == Policy::parallel)
    generator_images_parallel(mask, depth, out);
  else
    generator_images_serial(mask, depth, out);
}

inline void compose(Policy p, std::span<const std::uint32_t> outer,
                    std::span<const std::uint32_t> inner,
                    std::span<std::uint32_t> out) {
  if (p == Policy::parallel)
    compose_parallel(outer, inner, out);
  else
    compose_serial(outer, inner, out);
}

inline void csr_apply(Policy p, CsrView a,
                      std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) {
  if (p == Policy::parallel)
    csr_apply_parallel(a, in, out);
  else
    csr_apply_serial(a, in, out);
}

/// Process-wide default used by the library when no policy is passed.
/// Reproducibility mode pins it to `serial`.
Policy default_policy();
void set_default_policy(Policy p);

}  // namespace gomega::kernels
