#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "barlat/barcode.hpp"

namespace barlat {

/// One matched pair of a matching between two barcodes. Either side may be
/// the diagonal; diagonal-to-diagonal pairs are not listed.
struct MatchedPair {
  static constexpr std::size_t kDiagonal =
      std::numeric_limits<std::size_t>::max();

  std::size_t left = kDiagonal;   // 1-based label in the first barcode
  std::size_t right = kDiagonal;  // 1-based label in the second barcode
  double cost = 0.0;              // l-infinity cost of this pair

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;  // ordered by left label, then right
  double cost = 0.0;
};

struct DistanceResult {
  double distance = 0.0;
  Matching witness;
};

/// l-infinity distance from (birth, death) to the diagonal: half the
/// persistence.
double diagonal_cost(const Bar& bar) noexcept;
double pair_cost(const Bar& a, const Bar& b) noexcept;

/// Exact bottleneck distance, diagonal matching allowed.
DistanceResult bottleneck(const Barcode& a, const Barcode& b);

/// Exact q-Wasserstein distance with l-infinity ground cost. Throws InvalidQ
/// unless q is finite and q >= 1.
DistanceResult wasserstein(const Barcode& a, const Barcode& b, double q);

/// Max of the per-pair costs of a matching.
double bottleneck_cost(const Matching& matching) noexcept;
/// (sum of cost^q)^(1/q) of a matching.
double wasserstein_cost(const Matching& matching, double q);

struct Alignment {
  double alpha = 1.0;
  double delta = 0.0;
};

/// Affine map T(x) = alpha x + delta sending the earliest-born bar of `b` onto
/// the earliest-born bar of `a`. Throws DegenerateBar.
Alignment align(const Barcode& a, const Barcode& b);

struct ConvergenceReport {
  double d_inf = 0.0;
  double d_q = 0.0;
  double bound_inf = 0.0;
  double bound_q = 0.0;
  double alpha = 1.0;
  double delta = 0.0;
  bool pass = false;
};

/// Relative slack allowed on the distance bounds for rounding in the aligned
/// coordinates, scaled by the length of the containing bar.
inline constexpr double kBoundTolerance = 1e-9;

/// Aligns b onto a and compares the aligned bottleneck and q-Wasserstein
/// distances with |d_* - b_*| / 2^k and (n-1)^(1/q) |d_* - b_*| / 2^k.
/// Throws PreconditionFailed naming every violated precondition (strictness,
/// bar count, invariant equality, containing bar).
ConvergenceReport check_convergence_bounds(const Barcode& a, const Barcode& b,
                                           unsigned k, double q);

/// Jitters every endpoint by uniform noise in [-magnitude, magnitude] and
/// retries until the result is k-strict with the same power-k invariant.
/// Deterministic in (barcode, magnitude, k, seed). Throws RetriesExhausted.
Barcode perturb_preserving_invariant(const Barcode& barcode, double magnitude,
                                     unsigned k, std::uint64_t seed,
                                     std::size_t max_retries = 1000);

/// Open interval of values an endpoint can take, others fixed, without
/// changing the order of any sample point relative to the other bars'.
struct EndpointRange {
  double lo = 0.0;
  double hi = 0.0;
};
EndpointRange invariant_endpoint_range(const Barcode& barcode, unsigned k,
                                       std::size_t label, bool move_death);

/// Visits every endpoint of the bars other than the earliest-born one in a
/// seeded order and moves it `fraction` of the way toward a randomly chosen
/// end of its invariant_endpoint_range. The power-k invariant is unchanged.
/// fraction must lie in [0, 1).
Barcode push_within_invariant(const Barcode& barcode, unsigned k,
                              double fraction, std::uint64_t seed);

}  // namespace barlat
