#include "barlat/simd/kernels.hpp"

#include <atomic>

namespace barlat::simd {

namespace {

struct KernelTable {
  void (*dyadic_samples)(std::span<const double>, std::span<const double>,
                         unsigned, std::span<double>);
  void (*linf_costs)(std::span<const double>, std::span<const double>,
                     std::span<const double>, std::span<const double>,
                     std::span<double>);
  bool (*bits_subset)(std::span<const std::uint64_t>,
                      std::span<const std::uint64_t>);
};

constexpr KernelTable kScalar{&scalar::dyadic_samples, &scalar::linf_costs,
                              &scalar::bits_subset};
#if defined(BARLAT_HAVE_AVX2)
constexpr KernelTable kAvx2{&avx2::dyadic_samples, &avx2::linf_costs,
                            &avx2::bits_subset};
#endif
#if defined(BARLAT_HAVE_NEON)
constexpr KernelTable kNeon{&neon::dyadic_samples, &neon::linf_costs,
                            &neon::bits_subset};
#endif

const KernelTable* table_for(Backend backend) noexcept {
  switch (backend) {
#if defined(BARLAT_HAVE_AVX2)
    case Backend::Avx2:
      return &kAvx2;
#endif
#if defined(BARLAT_HAVE_NEON)
    case Backend::Neon:
      return &kNeon;
#endif
    default:
      return &kScalar;
  }
}

std::atomic<Backend>& selected() {
  static std::atomic<Backend> backend{detect_backend()};
  return backend;
}

const KernelTable& current() noexcept {
  return *table_for(selected().load(std::memory_order_relaxed));
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(BARLAT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(BARLAT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() noexcept {
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend active_backend() noexcept {
  return selected().load(std::memory_order_relaxed);
}

bool set_backend(Backend backend) noexcept {
  if (!backend_available(backend)) return false;
  selected().store(backend, std::memory_order_relaxed);
  return true;
}

void dyadic_samples(std::span<const double> births,
                    std::span<const double> deaths, unsigned k,
                    std::span<double> out) {
  current().dyadic_samples(births, deaths, k, out);
}

void linf_costs(std::span<const double> a_births,
                std::span<const double> a_deaths,
                std::span<const double> b_births,
                std::span<const double> b_deaths, std::span<double> out) {
  current().linf_costs(a_births, a_deaths, b_births, b_deaths, out);
}

bool bits_subset(std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b) {
  return current().bits_subset(a, b);
}

}  // namespace barlat::simd
