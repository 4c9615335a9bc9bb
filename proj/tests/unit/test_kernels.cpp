#include "doctest.h"

#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "gomega/kernels.hpp"

using namespace gomega::kernels;

TEST_CASE("generator images agree between serial and parallel kernels") {
  std::mt19937 rng(7);
  for (unsigned depth : {1u, 3u, 8u, 14u}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::uint8_t> sigma(depth, 0);
      if (trial == 0) {
        sigma[0] = 1;
      } else {
        for (unsigned n = 1; n < depth; ++n) sigma[n] = rng() % 2;
      }
      std::vector<std::uint32_t> s(std::size_t{1} << depth), p(s.size());
      generator_images_serial({sigma}, depth, s);
      generator_images_parallel({sigma}, depth, p);
      CHECK(s == p);
      // involution
      std::vector<std::uint32_t> sq(s.size());
      compose_serial(s, s, sq);
      for (std::size_t x = 0; x < sq.size(); ++x) CHECK(sq[x] == x);
    }
  }
}

TEST_CASE("root swap flips the first letter") {
  std::vector<std::uint8_t> sigma{1, 0, 0};
  std::vector<std::uint32_t> out(8);
  generator_images(Policy::serial, {sigma}, 3, out);
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(out[x] == (x ^ 4u));
}

TEST_CASE("compose applies the inner permutation first") {
  std::vector<std::uint32_t> outer{1, 2, 0}, inner{0, 2, 1}, s(3), p(3);
  compose_serial(outer, inner, s);
  compose_parallel(outer, inner, p);
  CHECK(s == std::vector<std::uint32_t>{1, 0, 2});
  CHECK(s == p);

  std::mt19937 rng(3);
  std::vector<std::uint32_t> a(1 << 12), b(1 << 12);
  std::iota(a.begin(), a.end(), 0u);
  std::iota(b.begin(), b.end(), 0u);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  std::vector<std::uint32_t> cs(a.size()), cp(a.size());
  compose(Policy::serial, a, b, cs);
  compose(Policy::parallel, a, b, cp);
  CHECK(cs == cp);
}

TEST_CASE("csr apply is bit-identical across policies") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 500;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> cols;
  std::vector<std::complex<double>> vals;
  for (std::size_t r = 0; r < n; ++r) {
    for (int k = 0; k < 7; ++k) {
      cols.push_back(static_cast<std::uint32_t>(rng() % n));
      vals.emplace_back(u(rng), u(rng));
    }
    row_ptr.push_back(cols.size());
  }
  std::vector<std::complex<double>> in(n), s(n), p(n);
  for (auto& z : in) z = {u(rng), u(rng)};
  CsrView view{row_ptr, cols, vals};
  csr_apply_serial(view, in, s);
  csr_apply_parallel(view, in, p);
  CHECK(s == p);
  // row 0 by hand
  std::complex<double> r0 = 0;
  for (std::size_t k = row_ptr[0]; k < row_ptr[1]; ++k) r0 += vals[k] * in[cols[k]];
  CHECK(s[0] == r0);
}

TEST_CASE("default policy can be pinned") {
  const Policy before = default_policy();
  set_default_policy(Policy::serial);
  CHECK(default_policy() == Policy::serial);
  set_default_policy(Policy::parallel);
  CHECK(default_policy() == Policy::parallel);
  set_default_policy(before);
}
