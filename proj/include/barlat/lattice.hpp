#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "barlat/multiperm.hpp"

namespace barlat {

/// The power-k barcode lattice on n bars: canonical words with multiplicity
/// m = 2^k + 1.
struct LatticeSpec {
  int n = 1;
  unsigned k = 0;

  int multiplicity() const noexcept { return (1 << k) + 1; }
  std::size_t positions() const noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(multiplicity());
  }
  /// Throws InvalidArgument unless n >= 1 and k <= kMaxPowerLevel.
  void validate() const;
};

/// Guards against combinatorial explosion. Callers may raise either bound.
struct EnumerationLimits {
  std::size_t max_positions = 16;
  /// Only consulted when every word of L(m^n) has to be listed.
  std::uint64_t max_raw_words = 20'000'000;
};

class HasseDiagram {
 public:
  HasseDiagram(LatticeSpec spec, std::vector<std::uint16_t> words,
               std::vector<std::pair<std::size_t, std::size_t>> covers,
               std::vector<long long> ranks);

  const LatticeSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return ranks_.size(); }
  std::size_t word_length() const noexcept { return length_; }

  std::span<const std::uint16_t> word(std::size_t index) const;
  CanonicalInvariant element(std::size_t index) const;
  std::optional<std::size_t> index_of(const CanonicalInvariant& s) const;

  /// (lower, upper) index pairs in lexicographic order.
  std::span<const std::pair<std::size_t, std::size_t>> covers() const noexcept {
    return covers_;
  }
  std::span<const long long> ranks() const noexcept { return ranks_; }
  std::span<const std::size_t> upper_covers(std::size_t index) const;
  std::span<const std::size_t> lower_covers(std::size_t index) const;

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept;

  /// Reachability along cover edges (the lattice order).
  bool leq(std::size_t lower, std::size_t upper) const;
  std::vector<bool> down_set(std::size_t index) const;
  std::vector<bool> up_set(std::size_t index) const;

 private:
  LatticeSpec spec_;
  std::size_t length_;
  std::vector<std::uint16_t> words_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<long long> ranks_;
  std::vector<std::size_t> up_offsets_, up_targets_;
  std::vector<std::size_t> down_offsets_, down_targets_;
};

/// 1 2 ... n, then 2^k copies of n, 2^k copies of n-1, ..., 2^k copies of 1.
CanonicalInvariant top_element(const LatticeSpec& spec);

/// All canonical words of the given shape in lexicographic order.
/// Throws TooLarge when n*m exceeds limits.max_positions.
std::vector<CanonicalInvariant> canonical_words(
    const LatticeSpec& spec, const EnumerationLimits& limits = {});

/// Elements, cover edges (one adjacent increasing pair swapped, result still
/// canonical) and ranks.
HasseDiagram enumerate(const LatticeSpec& spec,
                       const EnumerationLimits& limits = {});

/// Unique maximal common lower bound. Throws NotAnElement, or Internal when
/// the bound is not unique.
CanonicalInvariant meet(const HasseDiagram& diagram,
                        const CanonicalInvariant& s,
                        const CanonicalInvariant& t);
CanonicalInvariant join(const HasseDiagram& diagram,
                        const CanonicalInvariant& s,
                        const CanonicalInvariant& t);
std::size_t meet_index(const HasseDiagram& diagram, std::size_t s,
                       std::size_t t);
std::size_t join_index(const HasseDiagram& diagram, std::size_t s,
                       std::size_t t);

CanonicalInvariant meet(const CanonicalInvariant& s,
                        const CanonicalInvariant& t, const LatticeSpec& spec,
                        const EnumerationLimits& limits = {});
CanonicalInvariant join(const CanonicalInvariant& s,
                        const CanonicalInvariant& t, const LatticeSpec& spec,
                        const EnumerationLimits& limits = {});

struct IdealReport {
  LatticeSpec spec;
  std::uint64_t raw_words = 0;        // |L(m^n)|
  std::size_t canonical_count = 0;    // canonical words
  std::size_t ideal_count = 0;        // words below the top element
  std::vector<Multiperm> only_canonical;
  std::vector<Multiperm> only_in_ideal;
  bool equal = false;
};

/// Compares the canonical words with the principal ideal generated by
/// top_element inside the full multinomial Newman lattice.
IdealReport verify_ideal_isomorphism(const LatticeSpec& spec,
                                     const EnumerationLimits& limits = {});

/// counts[r] = number of elements of rank r.
std::vector<std::size_t> rank_vector(const LatticeSpec& spec,
                                     const EnumerationLimits& limits = {});
std::vector<std::size_t> rank_vector(const HasseDiagram& diagram);

/// (n m)! / (m!)^n, saturating at UINT64_MAX.
std::uint64_t multinomial_word_count(const LatticeSpec& spec) noexcept;

}  // namespace barlat
