#include "barlat/generate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "barlat/error.hpp"
#include "barlat/rng.hpp"

namespace barlat {

Barcode generate_barcode(const GenerateOptions& options) {
  if (options.n == 0) {
    throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  }
  if (!std::isfinite(options.spread) || options.spread <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "spread must be positive");
  }
  if (options.k > kMaxPowerLevel) {
    throw Error(ErrorKind::InvalidArgument, "k is too large");
  }
  if (!(options.min_gap >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "min_gap must be non-negative");
  }
  SplitMix64 rng(options.seed);
  const double spread = options.spread;
  const double gap = options.min_gap * spread;
  std::vector<Bar> bars(options.n);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::size_t first = 0;
    if (options.contained) {
      bars[0] = {0.0, spread};
      first = 1;
    }
    bool ok = true;
    for (std::size_t i = first; i < bars.size(); ++i) {
      double a = rng.uniform(0.0, spread);
      double b = rng.uniform(0.0, spread);
      if (a > b) std::swap(a, b);
      if (!(a < b) || (options.contained && !(a > 0.0 && b < spread))) {
        ok = false;
      }
      bars[i] = {a, b};
    }
    if (!ok) continue;
    Barcode candidate(bars);
    if (is_k_strict(candidate, options.k, gap)) return candidate;
  }
  throw Error(ErrorKind::RetriesExhausted,
              "no k-strict barcode found within the attempt limit");
}

}  // namespace barlat
