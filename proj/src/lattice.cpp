#include "barlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "barlat/error.hpp"

namespace barlat {

namespace {

void check_positions(const LatticeSpec& spec, const EnumerationLimits& limits) {
  spec.validate();
  if (spec.positions() > limits.max_positions) {
    throw Error(ErrorKind::TooLarge,
                "n*(2^k+1) = " + std::to_string(spec.positions()) +
                    " exceeds the enumeration cap of " +
                    std::to_string(limits.max_positions) + " positions");
  }
}

// Lexicographic DFS over canonical words: a symbol may be placed if it still
// has copies left and is either already started or the next new symbol.
template <typename Visit>
void for_each_canonical_word(const LatticeSpec& spec, Visit&& visit) {
  const int n = spec.n;
  const int m = spec.multiplicity();
  const std::size_t length = spec.positions();
  std::vector<int> word(length, 0);
  std::vector<int> used(n + 2, 0);
  int started = 0;

  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == length) {
      visit(std::as_const(word));
      return;
    }
    const int limit = std::min(started + 1, n);
    for (int symbol = 1; symbol <= limit; ++symbol) {
      if (used[symbol] == m) continue;
      const bool opens = used[symbol] == 0;
      word[pos] = symbol;
      ++used[symbol];
      if (opens) ++started;
      self(self, pos + 1);
      if (opens) --started;
      --used[symbol];
    }
  };
  recurse(recurse, 0);
}

std::vector<std::size_t> indices_where(const std::vector<bool>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

std::size_t require_index(const HasseDiagram& diagram,
                          const CanonicalInvariant& s) {
  auto idx = diagram.index_of(s);
  if (!idx) {
    throw Error(ErrorKind::NotAnElement,
                "(" + s.to_string() + ") is not an element of the lattice");
  }
  return *idx;
}

void build_adjacency(std::size_t count,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     bool upward, std::vector<std::size_t>& offsets,
                     std::vector<std::size_t>& targets) {
  offsets.assign(count + 1, 0);
  for (const auto& [lo, hi] : edges) ++offsets[(upward ? lo : hi) + 1];
  for (std::size_t i = 0; i < count; ++i) offsets[i + 1] += offsets[i];
  targets.assign(edges.size(), 0);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [lo, hi] : edges) {
    targets[fill[upward ? lo : hi]++] = upward ? hi : lo;
  }
}

}  // namespace

void LatticeSpec::validate() const {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "lattice needs n >= 1");
  }
  if (k > kMaxPowerLevel) {
    throw Error(ErrorKind::InvalidArgument, "power level too large");
  }
}

// ------------------------------------------------------------- HasseDiagram

HasseDiagram::HasseDiagram(
    LatticeSpec spec, std::vector<std::uint16_t> words,
    std::vector<std::pair<std::size_t, std::size_t>> covers,
    std::vector<long long> ranks)
    : spec_(spec),
      length_(spec.positions()),
      words_(std::move(words)),
      covers_(std::move(covers)),
      ranks_(std::move(ranks)) {
  if (words_.size() != ranks_.size() * length_) {
    throw Error(ErrorKind::Internal, "diagram word storage mismatch");
  }
  build_adjacency(ranks_.size(), covers_, true, up_offsets_, up_targets_);
  build_adjacency(ranks_.size(), covers_, false, down_offsets_, down_targets_);
}

std::span<const std::uint16_t> HasseDiagram::word(std::size_t index) const {
  return std::span<const std::uint16_t>(words_).subspan(index * length_,
                                                        length_);
}

CanonicalInvariant HasseDiagram::element(std::size_t index) const {
  const auto w = word(index);
  return CanonicalInvariant(Multiperm(spec_.n, spec_.multiplicity(),
                                      std::vector<int>(w.begin(), w.end())));
}

std::optional<std::size_t> HasseDiagram::index_of(
    const CanonicalInvariant& s) const {
  if (s.alphabet_size() != spec_.n ||
      s.multiplicity() != spec_.multiplicity()) {
    return std::nullopt;
  }
  const auto target = s.word();
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto w = word(mid);
    if (std::lexicographical_compare(w.begin(), w.end(), target.begin(),
                                     target.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(target.begin(), target.end(), word(lo).begin())) {
    return lo;
  }
  return std::nullopt;
}

std::span<const std::size_t> HasseDiagram::upper_covers(std::size_t index) const {
  return std::span<const std::size_t>(up_targets_)
      .subspan(up_offsets_[index], up_offsets_[index + 1] - up_offsets_[index]);
}

std::span<const std::size_t> HasseDiagram::lower_covers(std::size_t index) const {
  return std::span<const std::size_t>(down_targets_)
      .subspan(down_offsets_[index],
               down_offsets_[index + 1] - down_offsets_[index]);
}

std::size_t HasseDiagram::top() const noexcept {
  return static_cast<std::size_t>(
      std::max_element(ranks_.begin(), ranks_.end()) - ranks_.begin());
}

std::vector<bool> HasseDiagram::down_set(std::size_t index) const {
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{index};
  seen[index] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : lower_covers(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<bool> HasseDiagram::up_set(std::size_t index) const {
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{index};
  seen[index] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : upper_covers(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

bool HasseDiagram::leq(std::size_t lower, std::size_t upper) const {
  if (lower == upper) return true;
  if (ranks_[lower] >= ranks_[upper]) return false;
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{lower};
  seen[lower] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : upper_covers(v)) {
      if (w == upper) return true;
      if (!seen[w] && ranks_[w] < ranks_[upper]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// --------------------------------------------------------------- operations

CanonicalInvariant top_element(const LatticeSpec& spec) {
  spec.validate();
  const int extra = spec.multiplicity() - 1;
  std::vector<int> word;
  word.reserve(spec.positions());
  for (int symbol = 1; symbol <= spec.n; ++symbol) word.push_back(symbol);
  for (int symbol = spec.n; symbol >= 1; --symbol) {
    word.insert(word.end(), static_cast<std::size_t>(extra), symbol);
  }
  return CanonicalInvariant(
      Multiperm(spec.n, spec.multiplicity(), std::move(word)));
}

std::vector<CanonicalInvariant> canonical_words(const LatticeSpec& spec,
                                                const EnumerationLimits& limits) {
  check_positions(spec, limits);
  std::vector<CanonicalInvariant> out;
  for_each_canonical_word(spec, [&](const std::vector<int>& w) {
    out.emplace_back(Multiperm(spec.n, spec.multiplicity(), w));
  });
  return out;
}

HasseDiagram enumerate(const LatticeSpec& spec, const EnumerationLimits& limits) {
  check_positions(spec, limits);
  const std::size_t length = spec.positions();
  std::vector<std::uint16_t> words;
  std::vector<long long> ranks;
  for_each_canonical_word(spec, [&](const std::vector<int>& w) {
    words.insert(words.end(), w.begin(), w.end());
    ranks.push_back(rank(CanonicalInvariant(
        Multiperm(spec.n, spec.multiplicity(), w))));
  });
  const std::size_t count = ranks.size();

  auto find = [&](std::span<const std::uint16_t> target) -> std::size_t {
    std::size_t lo = 0;
    std::size_t hi = count;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const auto* w = words.data() + mid * length;
      if (std::lexicographical_compare(w, w + length, target.begin(),
                                       target.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo == count ||
        !std::equal(target.begin(), target.end(), words.data() + lo * length)) {
      throw Error(ErrorKind::Internal, "cover target missing from enumeration");
    }
    return lo;
  };

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::uint16_t> scratch(length);
  std::vector<int> first_seen(spec.n + 1);
  for (std::size_t e = 0; e < count; ++e) {
    const auto* w = words.data() + e * length;
    // Position of each symbol's first occurrence.
    std::fill(first_seen.begin(), first_seen.end(), -1);
    for (std::size_t p = 0; p < length; ++p) {
      if (first_seen[w[p]] < 0) first_seen[w[p]] = static_cast<int>(p);
    }
    for (std::size_t p = 0; p + 1 < length; ++p) {
      if (!(w[p] < w[p + 1])) continue;
      // Swapping pulls w[p+1] ahead of the first copy of w[p]: not canonical.
      if (first_seen[w[p + 1]] == static_cast<int>(p + 1) &&
          first_seen[w[p]] == static_cast<int>(p)) {
        continue;
      }
      std::copy(w, w + length, scratch.begin());
      std::swap(scratch[p], scratch[p + 1]);
      covers.emplace_back(e, find(scratch));
    }
  }
  std::sort(covers.begin(), covers.end());
  return HasseDiagram(spec, std::move(words), std::move(covers),
                      std::move(ranks));
}

std::size_t meet_index(const HasseDiagram& diagram, std::size_t s,
                       std::size_t t) {
  const auto below_s = diagram.down_set(s);
  const auto below_t = diagram.down_set(t);
  std::vector<bool> common(diagram.size());
  for (std::size_t i = 0; i < common.size(); ++i) common[i] = below_s[i] && below_t[i];
  std::vector<std::size_t> maximal;
  for (auto v : indices_where(common)) {
    const auto ups = diagram.upper_covers(v);
    if (std::none_of(ups.begin(), ups.end(),
                     [&](std::size_t w) { return common[w]; })) {
      maximal.push_back(v);
    }
  }
  if (maximal.size() != 1) {
    throw Error(ErrorKind::Internal,
                "meet is not unique: " + std::to_string(maximal.size()) +
                    " maximal lower bounds");
  }
  return maximal.front();
}

std::size_t join_index(const HasseDiagram& diagram, std::size_t s,
                       std::size_t t) {
  const auto above_s = diagram.up_set(s);
  const auto above_t = diagram.up_set(t);
  std::vector<bool> common(diagram.size());
  for (std::size_t i = 0; i < common.size(); ++i) common[i] = above_s[i] && above_t[i];
  std::vector<std::size_t> minimal;
  for (auto v : indices_where(common)) {
    const auto downs = diagram.lower_covers(v);
    if (std::none_of(downs.begin(), downs.end(),
                     [&](std::size_t w) { return common[w]; })) {
      minimal.push_back(v);
    }
  }
  if (minimal.size() != 1) {
    throw Error(ErrorKind::Internal,
                "join is not unique: " + std::to_string(minimal.size()) +
                    " minimal upper bounds");
  }
  return minimal.front();
}

CanonicalInvariant meet(const HasseDiagram& diagram,
                        const CanonicalInvariant& s,
                        const CanonicalInvariant& t) {
  return diagram.element(
      meet_index(diagram, require_index(diagram, s), require_index(diagram, t)));
}

CanonicalInvariant join(const HasseDiagram& diagram,
                        const CanonicalInvariant& s,
                        const CanonicalInvariant& t) {
  return diagram.element(
      join_index(diagram, require_index(diagram, s), require_index(diagram, t)));
}

CanonicalInvariant meet(const CanonicalInvariant& s,
                        const CanonicalInvariant& t, const LatticeSpec& spec,
                        const EnumerationLimits& limits) {
  return meet(enumerate(spec, limits), s, t);
}

CanonicalInvariant join(const CanonicalInvariant& s,
                        const CanonicalInvariant& t, const LatticeSpec& spec,
                        const EnumerationLimits& limits) {
  return join(enumerate(spec, limits), s, t);
}

std::uint64_t multinomial_word_count(const LatticeSpec& spec) noexcept {
  // Product of binomials C(i*m, m), i = 1..n, each built incrementally.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t m = static_cast<std::uint64_t>(spec.multiplicity());
  __extension__ using u128 = unsigned __int128;
  u128 total = 1;
  for (int i = 1; i <= spec.n; ++i) {
    u128 binom = 1;
    const std::uint64_t top = static_cast<std::uint64_t>(i) * m;
    for (std::uint64_t r = 1; r <= m; ++r) {
      binom = binom * (top - m + r) / r;
      if (binom > kMax) return kMax;
    }
    total *= binom;
    if (total > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(total);
}

IdealReport verify_ideal_isomorphism(const LatticeSpec& spec,
                                     const EnumerationLimits& limits) {
  check_positions(spec, limits);
  IdealReport report;
  report.spec = spec;
  report.raw_words = multinomial_word_count(spec);
  if (report.raw_words > limits.max_raw_words) {
    throw Error(ErrorKind::TooLarge,
                "L(m^n) has " + std::to_string(report.raw_words) +
                    " words, above the cap of " +
                    std::to_string(limits.max_raw_words));
  }
  const auto canonical = canonical_words(spec, limits);
  report.canonical_count = canonical.size();

  const auto top = top_element(spec);
  const auto top_inversions = inversion_set(embed(top.multiperm()));
  std::vector<int> word;
  word.reserve(spec.positions());
  for (int symbol = 1; symbol <= spec.n; ++symbol) {
    word.insert(word.end(), static_cast<std::size_t>(spec.multiplicity()), symbol);
  }
  std::vector<Multiperm> ideal;
  do {
    Multiperm s(spec.n, spec.multiplicity(), word);
    if (inversion_set(embed(s)).subset_of(top_inversions)) {
      ideal.push_back(std::move(s));
    }
  } while (std::next_permutation(word.begin(), word.end()));
  report.ideal_count = ideal.size();

  // Both lists are in lexicographic order.
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < canonical.size() || b < ideal.size()) {
    if (b == ideal.size() ||
        (a < canonical.size() && canonical[a].multiperm() < ideal[b])) {
      report.only_canonical.push_back(canonical[a++].multiperm());
    } else if (a == canonical.size() || ideal[b] < canonical[a].multiperm()) {
      report.only_in_ideal.push_back(ideal[b++]);
    } else {
      ++a;
      ++b;
    }
  }
  report.equal = report.only_canonical.empty() && report.only_in_ideal.empty();
  return report;
}

std::vector<std::size_t> rank_vector(const HasseDiagram& diagram) {
  const auto ranks = diagram.ranks();
  const long long max_rank = *std::max_element(ranks.begin(), ranks.end());
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_rank) + 1, 0);
  for (auto r : ranks) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

std::vector<std::size_t> rank_vector(const LatticeSpec& spec,
                                     const EnumerationLimits& limits) {
  return rank_vector(enumerate(spec, limits));
}

}  // namespace barlat
