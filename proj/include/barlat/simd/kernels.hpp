#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// vector variants chosen at runtime. Every variant must produce results that
// are bit-identical to the scalar kernels; the floating-point kernels use only
// correctly rounded add/sub/mul/max/abs, never fused multiply-add.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace barlat::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend) noexcept;

/// Best backend supported by the running CPU and compiled into this build.
Backend detect_backend() noexcept;
/// Backend currently used by the dispatching entry points below.
Backend active_backend() noexcept;
/// Forces a backend. Returns false (and leaves the selection untouched) when
/// the backend is not available on this machine.
bool set_backend(Backend backend) noexcept;
bool backend_available(Backend backend) noexcept;

/// Dyadic sample points b + l*(d-b)/2^k, l = 0..2^k, bar-major:
/// out[i*(2^k+1) + l]. The l = 0 and l = 2^k entries are the endpoints
/// themselves. out.size() must equal births.size() * (2^k + 1).
void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out);

/// Row-major l-infinity distances between diagram points:
/// out[i*b.size() + j] = max(|ab_i - bb_j|, |ad_i - bd_j|).
void linf_costs(std::span<const double> a_births,
                std::span<const double> a_deaths,
                std::span<const double> b_births,
                std::span<const double> b_deaths, std::span<double> out);

/// True iff every bit set in `a` is also set in `b`.
bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b);

namespace scalar {
void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out);
void linf_costs(std::span<const double> a_births,
                std::span<const double> a_deaths,
                std::span<const double> b_births,
                std::span<const double> b_deaths, std::span<double> out);
bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b);
}  // namespace scalar

#if defined(BARLAT_HAVE_AVX2)
namespace avx2 {
void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out);
void linf_costs(std::span<const double> a_births,
                std::span<const double> a_deaths,
                std::span<const double> b_births,
                std::span<const double> b_deaths, std::span<double> out);
bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b);
}  // namespace avx2
#endif

#if defined(BARLAT_HAVE_NEON)
namespace neon {
void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out);
void linf_costs(std::span<const double> a_births,
                std::span<const double> a_deaths,
                std::span<const double> b_births,
                std::span<const double> b_deaths, std::span<double> out);
bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b);
}  // namespace neon
#endif

}  // namespace barlat::simd
