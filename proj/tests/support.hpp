#pragma once

#include <span>
#include <vector>

#include "barlat/barcode.hpp"
#include "barlat/generate.hpp"
#include "barlat/multiperm.hpp"
#include "oracles.hpp"

namespace support {

inline std::vector<oracle::Interval> intervals(const barlat::Barcode& b) {
  std::vector<oracle::Interval> out;
  for (const auto& bar : b.bars()) out.emplace_back(bar.birth, bar.death);
  return out;
}

template <class T>
std::vector<int> word(std::span<const T> w) {
  return std::vector<int>(w.begin(), w.end());
}

inline std::vector<int> word(const barlat::Multiperm& s) {
  return word(s.word());
}

inline std::vector<int> word(const barlat::CanonicalInvariant& s) {
  return word(s.word());
}

inline barlat::Multiperm mp(std::vector<int> w) {
  return barlat::Multiperm::from_word(std::move(w));
}

inline barlat::Barcode random_barcode(std::size_t n, std::uint64_t seed,
                                      unsigned k = 0, bool contained = false) {
  barlat::GenerateOptions g;
  g.n = n;
  g.seed = seed;
  g.k = k;
  g.contained = contained;
  return barlat::generate_barcode(g);
}

}  // namespace support
