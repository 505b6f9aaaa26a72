#include <doctest.h>

#include "barlat/error.hpp"
#include "barlat/multiperm.hpp"
#include "barlat/polytope.hpp"
#include "support.hpp"

using namespace barlat;

TEST_CASE("vertices") {
  const auto v = vertices({2, 0});
  CHECK(v.ambient == 4);
  CHECK(v.vertices == std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 3, 4, 2}});
  CHECK(vertices({1, 0}).vertices == std::vector<std::vector<int>>{{1, 2}});
  const auto w = vertices({2, 1});
  CHECK(w.vertices.size() == 10);
  CHECK(w.ambient == 6);
  const auto words = oracle::canonical_words(2, 3);
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(w.vertices[i] == oracle::one_line(words[i], 3));
  }
  CHECK_THROWS_AS(vertices({9, 1}), Error);
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(vertices({2, 0})) == 2);
  CHECK(affine_dimension(vertices({2, 1})) == 4);
  CHECK(affine_dimension(vertices({1, 0})) == 0);
  CHECK(affine_dimension(VertexSet{3, {{1, 2, 3}}}) == 0);
  CHECK_THROWS_AS(affine_dimension(VertexSet{}), Error);
  CHECK(affine_dimension(VertexSet{2, {{0, 0}, {1, 1}, {2, 2}}}) == 1);

  for (const LatticeSpec spec : {LatticeSpec{2, 0}, LatticeSpec{3, 0}, LatticeSpec{4, 0},
                                 LatticeSpec{2, 1}, LatticeSpec{3, 1}, LatticeSpec{2, 2}}) {
    const auto set = vertices(spec);
    CHECK(static_cast<long>(affine_dimension(set)) == oracle::affine_rank(set.vertices));
    CHECK(static_cast<long>(affine_dimension(set)) ==
          static_cast<long>(spec.positions()) - 2);
  }
}

TEST_CASE("pi partition") {
  CHECK(pi_partition_blocks({2, 0}) == 2);
  CHECK(pi_partition_blocks({3, 1}) == 2);
  CHECK(pi_partition_blocks({1, 0}) == 2);
  CHECK(insertion_chain({1, 0}).empty());
  const auto chain = insertion_chain({2, 0});
  CHECK(std::find(chain.begin(), chain.end(), 1u) == chain.end());
  CHECK(path_components(4, {2, 3}) == 2);
  CHECK(path_components(4, {}) == 4);

  for (const LatticeSpec spec : {LatticeSpec{2, 0}, LatticeSpec{3, 0}, LatticeSpec{4, 0},
                                 LatticeSpec{2, 1}, LatticeSpec{3, 1}, LatticeSpec{2, 2},
                                 LatticeSpec{5, 1}, LatticeSpec{4, 3}}) {
    const auto top = embed(top_element(spec).multiperm()).one_line();
    CHECK(insertion_chain(spec).size() ==
          static_cast<std::size_t>(oracle::inversion_count(top)));
    CHECK(pi_partition_blocks(spec) == 2);
    CHECK(oracle::bubble_blocks(top) == 2);
  }
  // One bar with k >= 1: the lattice is a point, the chain is empty.
  CHECK(pi_partition_blocks({1, 1}) == 3);
  CHECK(affine_dimension(vertices({1, 1})) == 0);
}

TEST_CASE("dimension report") {
  const auto r = dimension_report({3, 0});
  CHECK(r.ambient == 6);
  CHECK(r.dim == 4);
  CHECK(r.expected == 4);
  CHECK(r.blocks == 2);
}
