// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "delone/simd/kernels.hpp"

namespace delone::simd {

namespace {

inline std::int64_t hsum_epi64(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

std::int64_t dot_i32_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    // even lanes, then odd lanes shifted down; mul_epi32 reads the low dword as signed
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  std::int64_t s = hsum_epi64(acc);
  for (; k < n; ++k) s += static_cast<std::int64_t>(a[k]) * b[k];
  return s;
}

void gemv_i32_avx2(const std::int32_t* rows, std::size_t count, std::size_t stride, const std::int32_t* vec,
                   std::size_t n, std::int64_t* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = dot_i32_avx2(rows + r * stride, vec, n);
}

void axpy_mod_avx2(double* dst, const double* src, double factor, std::size_t n, double p) {
  const double inv = 1.0 / p;
  const __m256d vf = _mm256_set1_pd(factor);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vinv = _mm256_set1_pd(inv);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d d = _mm256_loadu_pd(dst + k);
    __m256d s = _mm256_loadu_pd(src + k);
    __m256d t = _mm256_add_pd(d, _mm256_mul_pd(vf, s));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vp));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm256_storeu_pd(dst + k, r);
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

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", dot_i32_avx2, gemv_i32_avx2, axpy_mod_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

}  // namespace delone::simd
