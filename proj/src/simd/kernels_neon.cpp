#if defined(__aarch64__)
#include <arm_neon.h>

#include <cmath>

#include "delone/simd/kernels.hpp"

namespace delone::simd {

namespace {

std::int64_t dot_i32_neon(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    int32x4_t va = vld1q_s32(a + k);
    int32x4_t vb = vld1q_s32(b + k);
    acc = vmlal_s32(acc, vget_low_s32(va), vget_low_s32(vb));
    acc = vmlal_high_s32(acc, va, vb);
  }
  std::int64_t s = vaddvq_s64(acc);
  for (; k < n; ++k) s += static_cast<std::int64_t>(a[k]) * b[k];
  return s;
}

void gemv_i32_neon(const std::int32_t* rows, std::size_t count, std::size_t stride, const std::int32_t* vec,
                   std::size_t n, std::int64_t* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = dot_i32_neon(rows + r * stride, vec, n);
}

void axpy_mod_neon(double* dst, const double* src, double factor, std::size_t n, double p) {
  const double inv = 1.0 / p;
  const float64x2_t vf = vdupq_n_f64(factor);
  const float64x2_t vp = vdupq_n_f64(p);
  const float64x2_t vinv = vdupq_n_f64(inv);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    float64x2_t t = vaddq_f64(vld1q_f64(dst + k), vmulq_f64(vf, vld1q_f64(src + k)));
    float64x2_t q = vrndmq_f64(vmulq_f64(t, vinv));
    float64x2_t r = vsubq_f64(t, vmulq_f64(q, vp));
    r = vbslq_f64(vcltq_f64(r, zero), vaddq_f64(r, vp), r);
    r = vbslq_f64(vcgeq_f64(r, vp), vsubq_f64(r, vp), r);
    vst1q_f64(dst + k, r);
  }
  for (; k < n; ++k) {
    double t = dst[k] + factor * src[k];
    double q = std::floor(t * inv);
    double r = t - q * p;
    if (r < 0) r += p;
    if (r >= p) r -= p;
    dst[k] = r;
  }
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table{"neon", dot_i32_neon, gemv_i32_neon, axpy_mod_neon};
  return &table;
}

}  // namespace delone::simd
#endif
