#include "barlat/simd/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace barlat::simd::scalar {

void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out) {
  const std::size_t steps = std::size_t{1} << k;
  const std::size_t per_bar = steps + 1;
  const double scale = std::ldexp(1.0, -static_cast<int>(k));
  assert(out.size() == births.size() * per_bar);
  for (std::size_t i = 0; i < births.size(); ++i) {
    const double b = births[i];
    const double d = deaths[i];
    const double length = d - b;
    double* row = out.data() + i * per_bar;
    row[0] = b;
    for (std::size_t l = 1; l < steps; ++l) {
      row[l] = b + (static_cast<double>(l) * length) * scale;
    }
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
    for (std::size_t j = 0; j < cols; ++j) {
      out[i * cols + j] = std::max(std::fabs(a_births[i] - b_births[j]),
                                   std::fabs(a_deaths[i] - b_deaths[j]));
    }
  }
}

bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

}  // namespace barlat::simd::scalar
