// Compiled with -mavx2 (and without -mfma) only when the toolchain targets
// x86-64; callers reach these through the runtime dispatcher.

#include "barlat/simd/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cmath>

namespace barlat::simd::avx2 {

namespace {

inline __m256d abs_pd(__m256d x) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign, x);
}

}  // namespace

void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out) {
  const std::size_t steps = std::size_t{1} << k;
  const std::size_t per_bar = steps + 1;
  const double scale = std::ldexp(1.0, -static_cast<int>(k));
  assert(out.size() == births.size() * per_bar);
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d lane = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  for (std::size_t i = 0; i < births.size(); ++i) {
    const double b = births[i];
    const double d = deaths[i];
    const double length = d - b;
    double* row = out.data() + i * per_bar;
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d vlen = _mm256_set1_pd(length);
    std::size_t l = 0;
    for (; l + 4 <= steps; l += 4) {
      const __m256d idx =
          _mm256_add_pd(_mm256_set1_pd(static_cast<double>(l)), lane);
      const __m256d prod = _mm256_mul_pd(idx, vlen);
      _mm256_storeu_pd(row + l,
                       _mm256_add_pd(vb, _mm256_mul_pd(prod, vscale)));
    }
    for (; l < steps; ++l) {
      row[l] = b + (static_cast<double>(l) * length) * scale;
    }
    row[0] = b;
    row[steps] = d;
  }
}

void linf_costs(std::span<const double> a_births,
                std::span<const double> a_deaths,
                std::span<const double> b_births,
                std::span<const double> b_deaths, std::span<double> out) {
  const std::size_t cols = b_births.size();
  assert(out.size() == a_births.size() * cols);
  for (std::size_t i = 0; i < a_births.size(); ++i) {
    const __m256d ab = _mm256_set1_pd(a_births[i]);
    const __m256d ad = _mm256_set1_pd(a_deaths[i]);
    double* row = out.data() + i * cols;
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      const __m256d db =
          abs_pd(_mm256_sub_pd(ab, _mm256_loadu_pd(b_births.data() + j)));
      const __m256d dd =
          abs_pd(_mm256_sub_pd(ad, _mm256_loadu_pd(b_deaths.data() + j)));
      _mm256_storeu_pd(row + j, _mm256_max_pd(db, dd));
    }
    for (; j < cols; ++j) {
      const double db = std::fabs(a_births[i] - b_births[j]);
      const double dd = std::fabs(a_deaths[i] - b_deaths[j]);
      row[j] = db < dd ? dd : db;
    }
  }
}

bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  std::size_t w = 0;
  for (; w + 4 <= a.size(); w += 4) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + w));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + w));
    // testc(vb, va) is set iff (~vb & va) == 0.
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

}  // namespace barlat::simd::avx2
