#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace delone::simd {

// Inner loops shared by enumeration post-processing, design-strength pair sums
// and modular elimination. Every variant must agree bit-for-bit with the scalar
// reference; tests/unit/test_simd.cpp checks this on random data.
struct KernelTable {
  std::string_view name;

  // sum_k a[k] * b[k]; exact whenever the true sum fits in 64 bits
  // (callers keep |a|,|b| < 2^24 and n < 2^14).
  std::int64_t (*dot_i32)(const std::int32_t* a, const std::int32_t* b, std::size_t n);

  // out[r] = dot(rows + r * stride, vec, n) for r in [0, count)
  void (*gemv_i32)(const std::int32_t* rows, std::size_t count, std::size_t stride, const std::int32_t* vec,
                   std::size_t n, std::int64_t* out);

  // dst[k] = (dst[k] + factor * src[k]) mod p, all values integers in [0, p) held
  // in doubles; requires p < 2^25 so every intermediate is exact.
  void (*axpy_mod)(double* dst, const double* src, double factor, std::size_t n, double p);
};

const KernelTable& scalar_kernels();
/// nullptr when AVX2 is not compiled in or not supported by the running CPU.
const KernelTable* avx2_kernels();
/// nullptr unless built for AArch64.
const KernelTable* neon_kernels();

/// The table used by the library: the widest supported variant, unless the
/// environment variable DELONE_SIMD=scalar forces the reference kernels.
const KernelTable& active_kernels();

}  // namespace delone::simd
