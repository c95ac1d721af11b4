#include <doctest.h>

#include <random>
#include <vector>

#include "delone/simd/kernels.hpp"

using namespace delone::simd;

namespace {

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out;
  if (auto* k = avx2_kernels()) out.push_back(k);
  if (auto* k = neon_kernels()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("simd variants agree with the scalar kernels") {
  const KernelTable& ref = scalar_kernels();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::int32_t> big(-(1 << 23), (1 << 23));
  for (const KernelTable* k : variants()) {
    CAPTURE(k->name);
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 24u, 25u, 31u, 300u}) {
      std::vector<std::int32_t> a(n), b(n);
      for (auto& x : a) x = big(rng);
      for (auto& x : b) x = big(rng);
      CHECK(k->dot_i32(a.data(), b.data(), n) == ref.dot_i32(a.data(), b.data(), n));

      const std::size_t count = 13, stride = n + 3;
      std::vector<std::int32_t> rows(count * stride);
      for (auto& x : rows) x = big(rng);
      std::vector<std::int64_t> o1(count), o2(count);
      k->gemv_i32(rows.data(), count, stride, a.data(), n, o1.data());
      ref.gemv_i32(rows.data(), count, stride, a.data(), n, o2.data());
      CHECK(o1 == o2);

      for (double p : {3.0, 65521.0, 16777259.0, 33554393.0}) {
        std::uniform_int_distribution<std::int64_t> r(0, static_cast<std::int64_t>(p) - 1);
        std::vector<double> d1(n), src(n);
        for (auto& x : d1) x = static_cast<double>(r(rng));
        for (auto& x : src) x = static_cast<double>(r(rng));
        std::vector<double> d2 = d1;
        double f = static_cast<double>(r(rng));
        k->axpy_mod(d1.data(), src.data(), f, n, p);
        ref.axpy_mod(d2.data(), src.data(), f, n, p);
        CHECK(d1 == d2);
      }
    }
  }
}

TEST_CASE("scalar axpy_mod matches integer arithmetic") {
  const double p = 33554393.0;  // prime below 2^25
  std::mt19937_64 rng(5);
  std::vector<double> dst(50), src(50);
  std::vector<std::int64_t> expect(50);
  for (std::size_t i = 0; i < 50; ++i) {
    dst[i] = static_cast<double>(rng() % 33554393);
    src[i] = static_cast<double>(rng() % 33554393);
  }
  double f = 33554392.0;
  for (std::size_t i = 0; i < 50; ++i) {
    __int128 t = static_cast<__int128>(dst[i]) + static_cast<__int128>(f) * static_cast<__int128>(src[i]);
    expect[i] = static_cast<std::int64_t>(t % 33554393);
  }
  scalar_kernels().axpy_mod(dst.data(), src.data(), f, 50, p);
  for (std::size_t i = 0; i < 50; ++i) CHECK(static_cast<std::int64_t>(dst[i]) == expect[i]);
}

TEST_CASE("active kernel table is usable") {
  const KernelTable& k = active_kernels();
  std::int32_t a[3] = {1, 2, 3}, b[3] = {4, -5, 6};
  CHECK(k.dot_i32(a, b, 3) == 12);
}
