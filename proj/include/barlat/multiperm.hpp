#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "barlat/barcode.hpp"

namespace barlat {

/// A word over {1..n} in which every symbol occurs exactly m times: an
/// element of the multinomial Newman lattice L(m^n).
class Multiperm {
 public:
  /// Throws ShapeMismatch when the word is not a permutation of
  /// {1^m, ..., n^m}.
  Multiperm(int alphabet_size, int multiplicity, std::vector<int> word);

  /// Infers n from the largest symbol and m from the length.
  static Multiperm from_word(std::vector<int> word);

  int alphabet_size() const noexcept { return n_; }
  int multiplicity() const noexcept { return m_; }
  std::size_t length() const noexcept { return word_.size(); }
  std::span<const int> word() const noexcept { return word_; }

  /// "1 2 1 3 3 2"
  std::string to_string() const;

  friend bool operator==(const Multiperm&, const Multiperm&) = default;
  friend auto operator<=>(const Multiperm&, const Multiperm&) = default;

 private:
  int n_;
  int m_;
  std::vector<int> word_;
};

/// Canonical representative of an S_n-orbit: first occurrences of the
/// symbols appear in increasing order.
class CanonicalInvariant {
 public:
  /// Throws NotCanonical when the first occurrences are out of order.
  explicit CanonicalInvariant(Multiperm word);

  const Multiperm& multiperm() const noexcept { return word_; }
  std::span<const int> word() const noexcept { return word_.word(); }
  int alphabet_size() const noexcept { return word_.alphabet_size(); }
  int multiplicity() const noexcept { return word_.multiplicity(); }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const CanonicalInvariant&,
                         const CanonicalInvariant&) = default;
  friend auto operator<=>(const CanonicalInvariant&,
                          const CanonicalInvariant&) = default;

 private:
  Multiperm word_;
};

/// An element i_r of the totally ordered set 1_1 < ... < 1_m < 2_1 < ... .
struct SymbolCopy {
  int symbol = 0;
  int copy = 0;

  friend bool operator==(const SymbolCopy&, const SymbolCopy&) = default;
  friend auto operator<=>(const SymbolCopy&, const SymbolCopy&) = default;
};

/// Permutation of the set of symbol copies in which copies of one symbol
/// appear in increasing copy order.
class EmbeddedPermutation {
 public:
  EmbeddedPermutation(int alphabet_size, int multiplicity,
                      std::vector<SymbolCopy> entries);

  int alphabet_size() const noexcept { return n_; }
  int multiplicity() const noexcept { return m_; }
  std::span<const SymbolCopy> entries() const noexcept { return entries_; }

  /// Position p holds the 1-based rank of its symbol copy in the total order,
  /// i.e. (symbol - 1) * m + copy.
  std::vector<int> one_line() const;

  friend bool operator==(const EmbeddedPermutation&,
                         const EmbeddedPermutation&) = default;

 private:
  int n_;
  int m_;
  std::vector<SymbolCopy> entries_;
};

/// Inversions of an embedded permutation, stored as a bitset over the
/// N(N-1)/2 pairs (x, y), x > y, of the N symbol copies.
class InversionSet {
 public:
  InversionSet(int alphabet_size, int multiplicity);

  int alphabet_size() const noexcept { return n_; }
  int multiplicity() const noexcept { return m_; }

  bool contains(SymbolCopy larger, SymbolCopy smaller) const;
  void insert(SymbolCopy larger, SymbolCopy smaller);
  std::size_t size() const noexcept;
  /// Throws ShapeMismatch when the universes differ.
  bool subset_of(const InversionSet& other) const;
  /// (larger, smaller) pairs, ordered by smaller then larger.
  std::vector<std::pair<SymbolCopy, SymbolCopy>> pairs() const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  std::size_t bit_index(SymbolCopy larger, SymbolCopy smaller) const;

  int n_;
  int m_;
  std::vector<std::uint64_t> bits_;
};

/// Multiplicities a_ij of the pairs (j, i), i < j: the number of copies of j
/// that precede copies of i.
class InversionMultiset {
 public:
  struct Entry {
    int larger = 0;
    int smaller = 0;
    int multiplicity = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit InversionMultiset(int alphabet_size);

  int alphabet_size() const noexcept { return n_; }
  int count(int larger, int smaller) const;
  void add(int larger, int smaller, int times = 1);
  /// Total with multiplicity.
  long long total() const noexcept;
  /// Componentwise a_ij <= b_ij; throws ShapeMismatch on different n.
  bool subset_of(const InversionMultiset& other) const;
  /// Nonzero entries ordered by smaller symbol, then larger.
  std::vector<Entry> entries() const;
  /// "{(2,1)^2, (3,1)^1}"
  std::string to_string() const;

  friend bool operator==(const InversionMultiset&,
                         const InversionMultiset&) = default;

 private:
  std::size_t index(int larger, int smaller) const;

  int n_;
  std::vector<int> counts_;
};

/// Labels of the sample points in increasing order; m = 2^k + 1.
/// Throws NotKStrict naming a colliding pair.
Multiperm labeled_word(const Barcode& barcode, unsigned k);

/// Canonical representative of the orbit of labeled_word(barcode, k).
CanonicalInvariant power_invariant(const Barcode& barcode, unsigned k);

/// word'[p] = pi(word[p]); pi is one-line, 1-based. Throws InvalidArgument
/// unless pi is a permutation of 1..n.
Multiperm relabel(const Multiperm& s, std::span<const int> pi);

/// Symbols in order of first occurrence.
std::vector<int> first_occurrence_order(const Multiperm& s);
bool is_canonical(const Multiperm& s);
CanonicalInvariant canonicalize(const Multiperm& s);

/// Replaces the r-th occurrence of symbol i by i_r.
EmbeddedPermutation embed(const Multiperm& s);

InversionSet inversion_set(const EmbeddedPermutation& p);
InversionMultiset inversion_multiset(const Multiperm& s);
InversionMultiset inversion_multiset(const CanonicalInvariant& s);

/// Multinomial Newman order: inv(embed(s)) is a subset of inv(embed(t)).
/// Throws ShapeMismatch.
bool newman_leq(const Multiperm& s, const Multiperm& t);

/// Inversion-multiset containment on canonical representatives.
bool multiset_leq(const CanonicalInvariant& s, const CanonicalInvariant& t);
/// As above; throws NotCanonical when either word is not canonical.
bool multiset_leq(const Multiperm& s, const Multiperm& t);

/// Length of the element in the lattice: number of inversions of embed(s).
long long rank(const CanonicalInvariant& s);

/// Deletes the 2nd, 4th, 6th, ... occurrence of every symbol, mapping
/// multiplicity 2^(k+1)+1 to 2^k+1. Throws ShapeMismatch for any other m.
Multiperm halve_resolution(const Multiperm& s);
CanonicalInvariant halve_resolution(const CanonicalInvariant& s);
/// Applies halve_resolution until the multiplicity is 2^target_k + 1.
CanonicalInvariant project_to_level(const CanonicalInvariant& s,
                                    unsigned target_k);

/// Power level k with m = 2^k + 1, or -1 when m has no such form.
int power_level_of(int multiplicity) noexcept;

/// tau_B^{-1} sigma_B: position of each death in birth order. Throws
/// NotStrict.
std::vector<int> death_order_permutation(const Barcode& barcode);

/// Symbols in order of their second occurrence.
std::vector<int> second_occurrences(const Multiperm& s);

}  // namespace barlat
