#pragma once

#include <cstddef>
#include <cstdint>

#include "barlat/barcode.hpp"

namespace barlat {

struct GenerateOptions {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  unsigned k = 0;
  double spread = 1.0;
  /// Bar 1 becomes (0, spread) and every other bar lies strictly inside it.
  bool contained = false;
  /// Minimum gap between level-k sample points, as a fraction of spread.
  double min_gap = 1e-9;
  std::size_t max_attempts = 10000;
};

/// Uniform endpoints in [0, spread], redrawn until the barcode is k-strict
/// with the requested gap. Deterministic in the options.
/// Throws InvalidArgument or RetriesExhausted.
Barcode generate_barcode(const GenerateOptions& options);

}  // namespace barlat
