#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "barlat/error.hpp"
#include "barlat/multiperm.hpp"
#include "barlat/rng.hpp"
#include "support.hpp"

using namespace barlat;
using support::mp;
using support::word;

namespace {

const Barcode kB1{{1.0, 2.0}, {1.5, 3.0}, {2.5, 2.75}};
const Barcode kB2{{1.5, 3.0}, {1.0, 2.0}, {2.5, 2.75}};
const Barcode kRefined{{1.0, 2.5}, {1.5, 4.0}, {3.0, 3.5}};

CanonicalInvariant canon(std::vector<int> w) {
  return CanonicalInvariant(mp(std::move(w)));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Random arrangement of m copies of 1..n.
std::vector<int> random_word(int n, int m, SplitMix64& rng) {
  std::vector<int> w;
  for (int s = 1; s <= n; ++s) w.insert(w.end(), m, s);
  for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng.below(i)]);
  return w;
}

}  // namespace

TEST_CASE("multipermutation shape") {
  const auto s = mp({1, 2, 1, 3, 3, 2});
  CHECK(s.alphabet_size() == 3);
  CHECK(s.multiplicity() == 2);
  CHECK(s.to_string() == "1 2 1 3 3 2");
  CHECK(kind_of([] { mp({1, 2, 2}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { mp({1, 3, 1, 3}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { mp({0, 1}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { Multiperm(2, 2, {1, 2, 1}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { canon({2, 1, 2, 1}); }) == ErrorKind::NotCanonical);
}

TEST_CASE("labeled words") {
  CHECK(labeled_word(kB1, 0).to_string() == "1 2 1 3 3 2");
  CHECK(labeled_word(kB2, 0).to_string() == "2 1 2 3 3 1");
  CHECK(labeled_word(kRefined, 1).to_string() == "1 2 1 1 2 3 3 3 2");
  CHECK(kind_of([] { labeled_word(Barcode{{-1.0, 1.0}, {-2.0, 2.0}}, 1); }) ==
        ErrorKind::NotKStrict);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const unsigned k = seed % 4;
    const auto b = support::random_barcode(1 + seed % 6, seed, k);
    CHECK(word(labeled_word(b, k)) == oracle::labeled_word(support::intervals(b), k));
  }
}

TEST_CASE("relabel and canonicalize") {
  const std::vector<int> swap12{2, 1, 3};
  CHECK(relabel(mp({1, 2, 1, 3, 3, 2}), swap12).to_string() == "2 1 2 3 3 1");
  const std::vector<int> id{1, 2, 3};
  CHECK(relabel(mp({1, 2, 1, 3, 3, 2}), id) == mp({1, 2, 1, 3, 3, 2}));
  CHECK_THROWS_AS(relabel(mp({1, 2, 1, 2}), swap12), Error);

  CHECK(canonicalize(mp({2, 1, 4, 1, 3, 3, 2, 4})).to_string() == "1 2 3 2 4 4 1 3");
  CHECK(first_occurrence_order(mp({2, 1, 4, 1, 3, 3, 2, 4})) == std::vector<int>{2, 1, 4, 3});
  CHECK(is_canonical(mp({1, 2, 1, 2})));
  CHECK_FALSE(is_canonical(mp({2, 1, 1, 2})));

  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = random_word(1 + trial % 5, 1 + trial % 4, rng);
    const auto c = canonicalize(mp(w));
    CHECK(word(c) == oracle::canonical(w));
    CHECK(canonicalize(c.multiperm()) == c);
  }
}

TEST_CASE("power invariants") {
  CHECK(power_invariant(kB1, 0).to_string() == "1 2 1 3 3 2");
  CHECK(power_invariant(kB2, 0).to_string() == "1 2 1 3 3 2");
  CHECK(power_invariant(Barcode{{0.0, 10.0}, {1.0, 2.0}}, 1).to_string() == "1 2 2 2 1 1");
  CHECK(kind_of([] { power_invariant(Barcode{{0.0, 1.0}, {0.0, 2.0}}, 0); }) ==
        ErrorKind::NotKStrict);
}

TEST_CASE("embedding and inversion sets") {
  const auto e = embed(mp({1, 2, 1, 3, 3, 2}));
  const std::vector<SymbolCopy> expected{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {3, 2}, {2, 2}};
  CHECK(std::vector<SymbolCopy>(e.entries().begin(), e.entries().end()) == expected);
  CHECK(e.one_line() == std::vector<int>{1, 3, 2, 5, 6, 4});
  CHECK(embed(mp({1, 1, 2, 2})).one_line() == std::vector<int>{1, 2, 3, 4});

  const auto inv = inversion_set(e);
  CHECK(inv.size() == 3);
  CHECK(inv.contains({2, 1}, {1, 2}));
  CHECK(inv.contains({3, 1}, {2, 2}));
  CHECK(inv.contains({3, 2}, {2, 2}));
  CHECK_FALSE(inv.contains({2, 2}, {1, 1}));
  CHECK(inversion_set(embed(mp({1, 1, 2, 2}))).size() == 0);

  const auto perm = inversion_set(embed(mp({1, 2, 5, 4, 3, 6})));
  CHECK(perm.size() == 3);
  CHECK(perm.contains({5, 1}, {4, 1}));
  CHECK(perm.contains({5, 1}, {3, 1}));
  CHECK(perm.contains({4, 1}, {3, 1}));

  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5, m = 1 + trial % 3;
    const auto w = random_word(n, m, rng);
    const auto line = embed(mp(w)).one_line();
    CHECK(line == oracle::one_line(w, m));
    const auto set = inversion_set(embed(mp(w)));
    CHECK(static_cast<long long>(set.size()) == oracle::inversion_count(line));
    CHECK(set.pairs().size() == set.size());
  }
  CHECK_THROWS_AS(inversion_set(embed(mp({1, 2}))).subset_of(
                      inversion_set(embed(mp({1, 2, 1, 2})))),
                  Error);
}

TEST_CASE("inversion multisets") {
  const auto a = inversion_multiset(canon({1, 2, 3, 2, 4, 4, 1, 3}));
  // Both copies of 4 precede the second 3.
  CHECK(a.to_string() == "{(2,1)^2, (3,1)^1, (4,1)^2, (3,2)^1, (4,3)^2}");
  CHECK(a.count(2, 1) == 2);
  CHECK(a.count(4, 2) == 0);
  CHECK(a.total() == 8);
  CHECK(a.total() == static_cast<long long>(
                         inversion_set(embed(mp({1, 2, 3, 2, 4, 4, 1, 3}))).size()));
  CHECK(inversion_multiset(canon({1, 1, 2, 2})).total() == 0);
  CHECK(inversion_multiset(canon({1, 2, 2, 1})).to_string() == "{(2,1)^2}");

  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_word(1 + trial % 5, 1 + trial % 4, rng);
    const auto ms = inversion_multiset(mp(w));
    for (const auto& [key, v] : oracle::inversions(w)) {
      CHECK(ms.count(key.first, key.second) == v);
    }
    CHECK(ms.total() == oracle::inversion_count(w));
  }
}

TEST_CASE("orders") {
  CHECK(newman_leq(mp({1, 1, 2, 1, 2, 2}), mp({1, 2, 1, 2, 1, 2})));
  CHECK_FALSE(newman_leq(mp({1, 2, 2, 1, 1, 2}), mp({1, 1, 2, 2, 2, 1})));
  CHECK_FALSE(newman_leq(mp({1, 1, 2, 2, 2, 1}), mp({1, 2, 2, 1, 1, 2})));
  CHECK(newman_leq(mp({1, 2, 2, 1}), mp({1, 2, 2, 1})));
  CHECK(kind_of([] { newman_leq(mp({1, 2}), mp({1, 1, 2, 2})); }) ==
        ErrorKind::ShapeMismatch);

  CHECK(multiset_leq(canon({1, 2, 1, 2}), canon({1, 2, 2, 1})));
  CHECK_FALSE(multiset_leq(canon({1, 2, 2, 1}), canon({1, 2, 1, 2})));
  CHECK(multiset_leq(canon({1, 2, 2, 1}), canon({1, 2, 2, 1})));
  CHECK(kind_of([] { multiset_leq(mp({2, 1, 1, 2}), mp({1, 2, 2, 1})); }) ==
        ErrorKind::NotCanonical);
  CHECK(kind_of([] { multiset_leq(canon({1, 2}), canon({1, 2, 1, 2})); }) ==
        ErrorKind::ShapeMismatch);

  // Newman order against its definition by adjacent increasing swaps.
  SplitMix64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3, m = 1 + trial % 3;
    const auto s = random_word(n, m, rng);
    const auto t = random_word(n, m, rng);
    CHECK(newman_leq(mp(s), mp(t)) == oracle::newman_reachable(s, t));
  }
}

TEST_CASE("rank") {
  CHECK(rank(power_invariant(kB1, 0)) == 3);
  CHECK(rank(canon({1, 1, 2, 2, 3, 3})) == 0);
  CHECK(rank(canon({1, 2, 2, 2, 1, 1})) == 6);
}

TEST_CASE("halving resolution") {
  CHECK(halve_resolution(mp({1, 2, 1, 1, 2, 3, 3, 3, 2})).to_string() == "1 2 1 3 3 2");
  CHECK(halve_resolution(mp({1, 1, 1, 2, 2, 2})).to_string() == "1 1 2 2");
  CHECK(kind_of([] { halve_resolution(mp({1, 1, 2, 2})); }) == ErrorKind::ShapeMismatch);
  CHECK(power_level_of(2) == 0);
  CHECK(power_level_of(3) == 1);
  CHECK(power_level_of(9) == 3);
  CHECK(power_level_of(4) == -1);
  CHECK(power_level_of(1) == -1);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto b = support::random_barcode(4, seed, 3);
    for (unsigned k = 1; k <= 3; ++k) {
      CHECK(halve_resolution(labeled_word(b, k)) == labeled_word(b, k - 1));
      CHECK(halve_resolution(power_invariant(b, k)) == power_invariant(b, k - 1));
      for (unsigned j = 0; j < k; ++j) {
        CHECK(project_to_level(power_invariant(b, k), j) == power_invariant(b, j));
      }
    }
  }
}

TEST_CASE("death order permutation") {
  CHECK(death_order_permutation(kB2) == std::vector<int>{1, 3, 2});
  CHECK(death_order_permutation(Barcode{{0.0, 10.0}, {1.0, 9.0}, {2.0, 8.0}}) ==
        std::vector<int>{3, 2, 1});
  CHECK(death_order_permutation(Barcode{{0.0, 1.0}, {2.0, 3.0}, {4.0, 5.0}}) ==
        std::vector<int>{1, 2, 3});
  CHECK(kind_of([] { death_order_permutation(Barcode{{0.0, 1.0}, {0.0, 2.0}}); }) ==
        ErrorKind::NotStrict);
  CHECK(second_occurrences(mp({1, 2, 1, 3, 3, 2})) == std::vector<int>{1, 3, 2});
}
