#include <cmath>
#include <cstdlib>
#include <string_view>

#include "delone/simd/kernels.hpp"

namespace delone::simd {

namespace {

std::int64_t dot_i32_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < n; ++k) s += static_cast<std::int64_t>(a[k]) * b[k];
  return s;
}

void gemv_i32_scalar(const std::int32_t* rows, std::size_t count, std::size_t stride, const std::int32_t* vec,
                     std::size_t n, std::int64_t* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = dot_i32_scalar(rows + r * stride, vec, n);
}

void axpy_mod_scalar(double* dst, const double* src, double factor, std::size_t n, double p) {
  const double inv = 1.0 / p;
  for (std::size_t k = 0; k < n; ++k) {
    double t = dst[k] + factor * src[k];
    double q = std::floor(t * inv);
    double r = t - q * p;
    if (r < 0) r += p;
    if (r >= p) r -= p;
    dst[k] = r;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", dot_i32_scalar, gemv_i32_scalar, axpy_mod_scalar};
  return table;
}

#if !defined(DELONE_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

#if !defined(__aarch64__)
const KernelTable* neon_kernels() { return nullptr; }
#endif

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("DELONE_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    if (const KernelTable* t = neon_kernels()) return t;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace delone::simd
