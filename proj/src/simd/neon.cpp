// AArch64 variants; compiled only when the target provides NEON.

#include "barlat/simd/kernels.hpp"

#include <arm_neon.h>

#include <cassert>
#include <cmath>

namespace barlat::simd::neon {

void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out) {
  const std::size_t steps = std::size_t{1} << k;
  const std::size_t per_bar = steps + 1;
  const double scale = std::ldexp(1.0, -static_cast<int>(k));
  assert(out.size() == births.size() * per_bar);
  const float64x2_t vscale = vdupq_n_f64(scale);
  const double lane_init[2] = {0.0, 1.0};
  const float64x2_t lane = vld1q_f64(lane_init);
  for (std::size_t i = 0; i < births.size(); ++i) {
    const double b = births[i];
    const double d = deaths[i];
    const double length = d - b;
    double* row = out.data() + i * per_bar;
    const float64x2_t vb = vdupq_n_f64(b);
    const float64x2_t vlen = vdupq_n_f64(length);
    std::size_t l = 0;
    for (; l + 2 <= steps; l += 2) {
      const float64x2_t idx =
          vaddq_f64(vdupq_n_f64(static_cast<double>(l)), lane);
      const float64x2_t prod = vmulq_f64(idx, vlen);
      vst1q_f64(row + l, vaddq_f64(vb, vmulq_f64(prod, vscale)));
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
    const float64x2_t ab = vdupq_n_f64(a_births[i]);
    const float64x2_t ad = vdupq_n_f64(a_deaths[i]);
    double* row = out.data() + i * cols;
    std::size_t j = 0;
    for (; j + 2 <= cols; j += 2) {
      const float64x2_t db = vabdq_f64(ab, vld1q_f64(b_births.data() + j));
      const float64x2_t dd = vabdq_f64(ad, vld1q_f64(b_deaths.data() + j));
      vst1q_f64(row + j, vmaxq_f64(db, dd));
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
  for (; w + 2 <= a.size(); w += 2) {
    const uint64x2_t rest =
        vbicq_u64(vld1q_u64(a.data() + w), vld1q_u64(b.data() + w));
    if ((vgetq_lane_u64(rest, 0) | vgetq_lane_u64(rest, 1)) != 0) return false;
  }
  for (; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

}  // namespace barlat::simd::neon
