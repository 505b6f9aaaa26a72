#include "barlat/multiperm.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "barlat/error.hpp"
#include "barlat/simd/kernels.hpp"

namespace barlat {

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_same_shape(const Multiperm& s, const Multiperm& t) {
  if (s.alphabet_size() != t.alphabet_size() ||
      s.multiplicity() != t.multiplicity()) {
    throw Error(ErrorKind::ShapeMismatch,
                "multipermutations have different shapes");
  }
}

}  // namespace

// ---------------------------------------------------------------- Multiperm

Multiperm::Multiperm(int alphabet_size, int multiplicity, std::vector<int> word)
    : n_(alphabet_size), m_(multiplicity), word_(std::move(word)) {
  if (n_ < 1 || m_ < 1) {
    throw Error(ErrorKind::ShapeMismatch,
                "alphabet size and multiplicity must be positive");
  }
  if (word_.size() != static_cast<std::size_t>(n_) * m_) {
    throw Error(ErrorKind::ShapeMismatch,
                "word length " + std::to_string(word_.size()) +
                    " does not equal n*m = " + std::to_string(n_ * m_));
  }
  std::vector<int> counts(n_ + 1, 0);
  for (int symbol : word_) {
    if (symbol < 1 || symbol > n_) {
      throw Error(ErrorKind::ShapeMismatch,
                  "symbol " + std::to_string(symbol) + " outside 1.." +
                      std::to_string(n_));
    }
    if (++counts[symbol] > m_) {
      throw Error(ErrorKind::ShapeMismatch,
                  "symbol " + std::to_string(symbol) + " occurs more than " +
                      std::to_string(m_) + " times");
    }
  }
}

Multiperm Multiperm::from_word(std::vector<int> word) {
  if (word.empty()) {
    throw Error(ErrorKind::ShapeMismatch, "empty word");
  }
  const int n = *std::max_element(word.begin(), word.end());
  if (n < 1 || word.size() % static_cast<std::size_t>(n) != 0) {
    throw Error(ErrorKind::ShapeMismatch,
                "word length is not a multiple of its largest symbol");
  }
  const int m = static_cast<int>(word.size() / static_cast<std::size_t>(n));
  return Multiperm(n, m, std::move(word));
}

std::string Multiperm::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < word_.size(); ++p) {
    if (p) out += ' ';
    out += std::to_string(word_[p]);
  }
  return out;
}

CanonicalInvariant::CanonicalInvariant(Multiperm word)
    : word_(std::move(word)) {
  if (!is_canonical(word_)) {
    throw Error(ErrorKind::NotCanonical,
                "(" + word_.to_string() +
                    ") has first occurrences out of order");
  }
}

// ------------------------------------------------------ EmbeddedPermutation

EmbeddedPermutation::EmbeddedPermutation(int alphabet_size, int multiplicity,
                                         std::vector<SymbolCopy> entries)
    : n_(alphabet_size), m_(multiplicity), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n_) * m_) {
    throw Error(ErrorKind::ShapeMismatch, "embedded permutation length");
  }
  std::vector<int> next_copy(n_ + 1, 1);
  for (const auto& e : entries_) {
    if (e.symbol < 1 || e.symbol > n_ || e.copy != next_copy[e.symbol]) {
      throw Error(ErrorKind::ShapeMismatch,
                  "copies must appear in increasing order");
    }
    ++next_copy[e.symbol];
  }
}

std::vector<int> EmbeddedPermutation::one_line() const {
  std::vector<int> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [this](const SymbolCopy& e) {
                   return (e.symbol - 1) * m_ + e.copy;
                 });
  return out;
}

// ------------------------------------------------------------- InversionSet

InversionSet::InversionSet(int alphabet_size, int multiplicity)
    : n_(alphabet_size), m_(multiplicity) {
  const std::size_t universe = static_cast<std::size_t>(n_) * m_;
  const std::size_t pairs = universe * (universe - 1) / 2;
  bits_.assign((pairs + 63) / 64, 0);
}

std::size_t InversionSet::bit_index(SymbolCopy larger,
                                    SymbolCopy smaller) const {
  const auto x = static_cast<std::size_t>((larger.symbol - 1) * m_ +
                                          larger.copy - 1);
  const auto y = static_cast<std::size_t>((smaller.symbol - 1) * m_ +
                                          smaller.copy - 1);
  if (!(x > y) || x >= static_cast<std::size_t>(n_) * m_) {
    throw Error(ErrorKind::InvalidArgument,
                "inversion pairs are (larger, smaller) symbol copies");
  }
  return x * (x - 1) / 2 + y;
}

bool InversionSet::contains(SymbolCopy larger, SymbolCopy smaller) const {
  const auto idx = bit_index(larger, smaller);
  return (bits_[idx / 64] >> (idx % 64)) & 1U;
}

void InversionSet::insert(SymbolCopy larger, SymbolCopy smaller) {
  const auto idx = bit_index(larger, smaller);
  bits_[idx / 64] |= std::uint64_t{1} << (idx % 64);
}

std::size_t InversionSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool InversionSet::subset_of(const InversionSet& other) const {
  if (n_ != other.n_ || m_ != other.m_) {
    throw Error(ErrorKind::ShapeMismatch, "inversion sets of different size");
  }
  return simd::bits_subset(bits_, other.bits_);
}

std::vector<std::pair<SymbolCopy, SymbolCopy>> InversionSet::pairs() const {
  std::vector<std::pair<SymbolCopy, SymbolCopy>> out;
  const int universe = n_ * m_;
  auto copy_of = [this](int rank0) {
    return SymbolCopy{rank0 / m_ + 1, rank0 % m_ + 1};
  };
  for (int y = 0; y < universe; ++y) {
    for (int x = y + 1; x < universe; ++x) {
      const auto idx = static_cast<std::size_t>(x) * (x - 1) / 2 + y;
      if ((bits_[idx / 64] >> (idx % 64)) & 1U) {
        out.emplace_back(copy_of(x), copy_of(y));
      }
    }
  }
  return out;
}

// -------------------------------------------------------- InversionMultiset

InversionMultiset::InversionMultiset(int alphabet_size) : n_(alphabet_size) {
  if (n_ < 1) throw Error(ErrorKind::ShapeMismatch, "alphabet size");
  counts_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 0);
}

std::size_t InversionMultiset::index(int larger, int smaller) const {
  if (!(1 <= smaller && smaller < larger && larger <= n_)) {
    throw Error(ErrorKind::InvalidArgument,
                "multiset pairs are (j, i) with 1 <= i < j <= n");
  }
  return static_cast<std::size_t>(larger - 1) * (larger - 2) / 2 +
         static_cast<std::size_t>(smaller - 1);
}

int InversionMultiset::count(int larger, int smaller) const {
  return counts_[index(larger, smaller)];
}

void InversionMultiset::add(int larger, int smaller, int times) {
  counts_[index(larger, smaller)] += times;
}

long long InversionMultiset::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0LL);
}

bool InversionMultiset::subset_of(const InversionMultiset& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorKind::ShapeMismatch,
                "inversion multisets over different alphabets");
  }
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    if (counts_[p] > other.counts_[p]) return false;
  }
  return true;
}

std::vector<InversionMultiset::Entry> InversionMultiset::entries() const {
  std::vector<Entry> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (int c = count(j, i); c > 0) out.push_back({j, i, c});
    }
  }
  return out;
}

std::string InversionMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& e : entries()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << e.larger << ',' << e.smaller << ")^" << e.multiplicity;
  }
  os << '}';
  return os.str();
}

// --------------------------------------------------------------- operations

Multiperm labeled_word(const Barcode& barcode, unsigned k) {
  auto points = sample_points(barcode, k);
  std::stable_sort(points.begin(), points.end(),
                   [](const SamplePoint& a, const SamplePoint& b) {
                     return a.value < b.value;
                   });
  for (std::size_t p = 1; p < points.size(); ++p) {
    if (points[p].value == points[p - 1].value) {
      throw Error(ErrorKind::NotKStrict,
                  "barcode is not " + std::to_string(k) +
                      "-strict: bars " + std::to_string(points[p - 1].label) +
                      " and " + std::to_string(points[p].label) +
                      " share the sample point " +
                      format_value(points[p].value));
    }
  }
  std::vector<int> word(points.size());
  std::transform(points.begin(), points.end(), word.begin(),
                 [](const SamplePoint& sp) { return static_cast<int>(sp.label); });
  return Multiperm(static_cast<int>(barcode.size()), (1 << k) + 1,
                   std::move(word));
}

CanonicalInvariant power_invariant(const Barcode& barcode, unsigned k) {
  return canonicalize(labeled_word(barcode, k));
}

Multiperm relabel(const Multiperm& s, std::span<const int> pi) {
  const int n = s.alphabet_size();
  if (pi.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidArgument, "relabeling has the wrong length");
  }
  std::vector<bool> seen(n + 1, false);
  for (int image : pi) {
    if (image < 1 || image > n || seen[image]) {
      throw Error(ErrorKind::InvalidArgument,
                  "relabeling is not a permutation of 1..n");
    }
    seen[image] = true;
  }
  std::vector<int> word(s.word().begin(), s.word().end());
  for (int& symbol : word) symbol = pi[symbol - 1];
  return Multiperm(n, s.multiplicity(), std::move(word));
}

std::vector<int> first_occurrence_order(const Multiperm& s) {
  std::vector<int> order;
  order.reserve(s.alphabet_size());
  std::vector<bool> seen(s.alphabet_size() + 1, false);
  for (int symbol : s.word()) {
    if (!seen[symbol]) {
      seen[symbol] = true;
      order.push_back(symbol);
    }
  }
  return order;
}

bool is_canonical(const Multiperm& s) {
  int next_new = 1;
  for (int symbol : s.word()) {
    if (symbol == next_new) {
      ++next_new;
    } else if (symbol > next_new) {
      return false;
    }
  }
  return true;
}

CanonicalInvariant canonicalize(const Multiperm& s) {
  const auto tau = first_occurrence_order(s);
  std::vector<int> tau_inverse(tau.size());
  for (std::size_t r = 0; r < tau.size(); ++r) {
    tau_inverse[tau[r] - 1] = static_cast<int>(r) + 1;
  }
  return CanonicalInvariant(relabel(s, tau_inverse));
}

EmbeddedPermutation embed(const Multiperm& s) {
  std::vector<int> seen(s.alphabet_size() + 1, 0);
  std::vector<SymbolCopy> entries;
  entries.reserve(s.length());
  for (int symbol : s.word()) entries.push_back({symbol, ++seen[symbol]});
  return EmbeddedPermutation(s.alphabet_size(), s.multiplicity(),
                             std::move(entries));
}

InversionSet inversion_set(const EmbeddedPermutation& p) {
  InversionSet out(p.alphabet_size(), p.multiplicity());
  const auto entries = p.entries();
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (entries[b] < entries[a]) out.insert(entries[a], entries[b]);
    }
  }
  return out;
}

InversionMultiset inversion_multiset(const Multiperm& s) {
  const int n = s.alphabet_size();
  InversionMultiset out(n);
  std::vector<int> seen(n + 1, 0);
  for (int symbol : s.word()) {
    for (int larger = symbol + 1; larger <= n; ++larger) {
      if (seen[larger]) out.add(larger, symbol, seen[larger]);
    }
    ++seen[symbol];
  }
  return out;
}

InversionMultiset inversion_multiset(const CanonicalInvariant& s) {
  return inversion_multiset(s.multiperm());
}

bool newman_leq(const Multiperm& s, const Multiperm& t) {
  require_same_shape(s, t);
  return inversion_set(embed(s)).subset_of(inversion_set(embed(t)));
}

bool multiset_leq(const CanonicalInvariant& s, const CanonicalInvariant& t) {
  require_same_shape(s.multiperm(), t.multiperm());
  return inversion_multiset(s).subset_of(inversion_multiset(t));
}

bool multiset_leq(const Multiperm& s, const Multiperm& t) {
  require_same_shape(s, t);
  return multiset_leq(CanonicalInvariant(s), CanonicalInvariant(t));
}

long long rank(const CanonicalInvariant& s) {
  return inversion_multiset(s).total();
}

int power_level_of(int multiplicity) noexcept {
  if (multiplicity < 2) return -1;
  const auto steps = static_cast<unsigned>(multiplicity - 1);
  if (!std::has_single_bit(steps)) return -1;
  return std::countr_zero(steps);
}

Multiperm halve_resolution(const Multiperm& s) {
  const int level = power_level_of(s.multiplicity());
  if (level < 1) {
    throw Error(ErrorKind::ShapeMismatch,
                "multiplicity " + std::to_string(s.multiplicity()) +
                    " is not 2^(k+1)+1 for any k >= 0");
  }
  std::vector<int> seen(s.alphabet_size() + 1, 0);
  std::vector<int> word;
  word.reserve(s.length() / 2 + s.alphabet_size());
  for (int symbol : s.word()) {
    if (seen[symbol]++ % 2 == 0) word.push_back(symbol);
  }
  return Multiperm(s.alphabet_size(), (1 << (level - 1)) + 1,
                   std::move(word));
}

CanonicalInvariant halve_resolution(const CanonicalInvariant& s) {
  return CanonicalInvariant(halve_resolution(s.multiperm()));
}

CanonicalInvariant project_to_level(const CanonicalInvariant& s,
                                    unsigned target_k) {
  const int level = power_level_of(s.multiplicity());
  if (level < 0 || static_cast<unsigned>(level) < target_k) {
    throw Error(ErrorKind::ShapeMismatch,
                "cannot project to a finer power level");
  }
  CanonicalInvariant current = s;
  for (int l = level; l > static_cast<int>(target_k); --l) {
    current = halve_resolution(current);
  }
  return current;
}

std::vector<int> death_order_permutation(const Barcode& barcode) {
  if (!is_k_strict(barcode, 0)) {
    throw Error(ErrorKind::NotStrict, "barcode is not strict");
  }
  const auto bars = barcode.bars();
  const auto by_birth = birth_order(barcode);
  std::vector<std::size_t> by_death(bars.size());
  std::iota(by_death.begin(), by_death.end(), 1);
  std::sort(by_death.begin(), by_death.end(),
            [&](std::size_t a, std::size_t b) {
              return bars[a - 1].death < bars[b - 1].death;
            });
  std::vector<int> birth_rank(bars.size() + 1);
  for (std::size_t r = 0; r < by_birth.size(); ++r) {
    birth_rank[by_birth[r]] = static_cast<int>(r) + 1;
  }
  std::vector<int> out(bars.size());
  for (std::size_t r = 0; r < by_death.size(); ++r) {
    out[r] = birth_rank[by_death[r]];
  }
  return out;
}

std::vector<int> second_occurrences(const Multiperm& s) {
  std::vector<int> seen(s.alphabet_size() + 1, 0);
  std::vector<int> out;
  for (int symbol : s.word()) {
    if (++seen[symbol] == 2) out.push_back(symbol);
  }
  return out;
}

}  // namespace barlat
