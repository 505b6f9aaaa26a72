#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "barlat/barcode.hpp"
#include "barlat/error.hpp"
#include "barlat/generate.hpp"
#include "support.hpp"

using namespace barlat;

namespace {

const Barcode kB1{{1.0, 2.0}, {1.5, 3.0}, {2.5, 2.75}};

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("barcode construction validates bars") {
  CHECK(kind_of([] { Barcode(std::vector<Bar>{}); }) == ErrorKind::InvalidBar);
  CHECK(kind_of([] { Barcode{{1.0, 1.0}}; }) == ErrorKind::InvalidBar);
  CHECK(kind_of([] { Barcode{{2.0, 1.0}}; }) == ErrorKind::InvalidBar);
  CHECK(kind_of([] { Barcode{{0.0, INFINITY}}; }) == ErrorKind::InvalidBar);
  CHECK(kind_of([] { Barcode{{NAN, 1.0}}; }) == ErrorKind::InvalidBar);
  CHECK(kB1.size() == 3);
  CHECK(kB1.bar(3).death == 2.75);
  CHECK(kind_of([] { (void)kB1.bar(0); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] { (void)kB1.bar(4); }) == ErrorKind::InvalidLabel);
}

TEST_CASE("sample points") {
  SUBCASE("midpoints") {
    const Barcode b{{1.0, 2.5}, {1.5, 4.0}, {3.0, 3.5}};
    const auto pts = sample_points(b, 1);
    REQUIRE(pts.size() == 9);
    CHECK(pts[1].value == 1.75);
    CHECK(pts[4].value == 2.75);
    CHECK(pts[7].value == 3.25);
    CHECK(pts[7].label == 3);
  }
  SUBCASE("single bar") {
    const auto p0 = sample_points(Barcode{{0.0, 1.0}}, 0);
    REQUIRE(p0.size() == 2);
    CHECK(p0[0] == SamplePoint{0.0, 1});
    CHECK(p0[1] == SamplePoint{1.0, 1});
    const auto p2 = sample_points(Barcode{{0.0, 1.0}}, 2);
    const double expected[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    REQUIRE(p2.size() == 5);
    for (int l = 0; l < 5; ++l) {
      CHECK(p2[l].value == expected[l]);
      CHECK(p2[l].label == 1);
    }
  }
  SUBCASE("endpoints are exact and even levels nest") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto b = support::random_barcode(5, seed);
      const auto fine = sample_points(b, 4);
      const auto coarse = sample_points(b, 3);
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(fine[i * 17].value == b.bars()[i].birth);
        CHECK(fine[i * 17 + 16].value == b.bars()[i].death);
        for (std::size_t l = 0; l <= 8; ++l) {
          CHECK(fine[i * 17 + 2 * l].value == coarse[i * 9 + l].value);
        }
      }
    }
  }
  CHECK_THROWS_AS(sample_points(kB1, kMaxPowerLevel + 1), Error);
}

TEST_CASE("k-strictness") {
  CHECK(is_k_strict(kB1, 0));
  CHECK_FALSE(is_k_strict(Barcode{{-1.0, 1.0}, {-2.0, 2.0}}, 1));
  CHECK(is_k_strict(Barcode{{-1.0, 1.0}, {-2.0, 2.0}}, 0));
  CHECK_FALSE(is_k_strict(Barcode{{0.0, 1.0}, {0.0, 2.0}}, 0));
  CHECK_FALSE(is_k_strict(Barcode{{0.0, 1.0}, {1.0, 2.0}}, 0));
  CHECK(is_k_strict(Barcode{{0.0, 1.0}, {1.0 + 1e-6, 2.0}}, 0));
  CHECK_FALSE(is_k_strict(Barcode{{0.0, 1.0}, {1.0 + 1e-6, 2.0}}, 0, 1e-5));
  CHECK_THROWS_AS(is_k_strict(kB1, 0, -1.0), Error);

  const auto collisions = find_collisions(Barcode{{-1.0, 1.0}, {-2.0, 2.0}}, 1);
  REQUIRE(collisions.size() == 1);
  CHECK(collisions[0].first.value == 0.0);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto b = support::random_barcode(4, seed, 2);
    for (unsigned k = 0; k <= 2; ++k) CHECK(is_k_strict(b, k));
  }
}

TEST_CASE("crossing numbers") {
  CHECK(crossing_number(kB1, 1, 2) == 1);
  CHECK(crossing_number(kB1, 2, 3) == 2);
  CHECK(crossing_number(kB1, 1, 3) == 0);
  CHECK(crossing_number(kB1, 3, 2) == 2);
  CHECK(kind_of([] { crossing_number(kB1, 1, 1); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] { crossing_number(kB1, 0, 1); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] { crossing_number(kB1, 1, 4); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] {
          crossing_number(Barcode{{0.0, 1.0}, {0.0, 2.0}}, 1, 2);
        }) == ErrorKind::NotStrict);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto b = support::random_barcode(6, seed);
    const auto iv = support::intervals(b);
    for (std::size_t i = 1; i <= 6; ++i) {
      for (std::size_t j = 1; j <= 6; ++j) {
        if (i == j) continue;
        CHECK(crossing_number(b, i, j) == oracle::crossing(iv[i - 1], iv[j - 1]));
      }
    }
  }
}

TEST_CASE("interval graphs") {
  const auto g = interval_graph(kB1);
  CHECK(g.vertex_count == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.connected());
  CHECK(interval_graph(Barcode{{0.0, 1.0}}).edges.empty());
  const auto h = interval_graph(Barcode{{0.0, 10.0}, {1.0, 2.0}, {3.0, 4.0}});
  CHECK(h.edges.size() == 2);
  CHECK(h.has_edge(1, 2));
  CHECK(h.has_edge(1, 3));
  CHECK_FALSE(h.has_edge(2, 3));
  CHECK_FALSE(interval_graph(Barcode{{0.0, 1.0}, {1.0, 2.0}}).has_edge(1, 2));
  CHECK_FALSE(interval_graph(Barcode{{0.0, 1.0}, {2.0, 3.0}}).connected());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto b = support::random_barcode(7, seed);
    const auto graph = interval_graph(b);
    for (std::size_t i = 1; i <= 7; ++i) {
      for (std::size_t j = i + 1; j <= 7; ++j) {
        CHECK(graph.has_edge(i, j) == (crossing_number(b, i, j) >= 1));
      }
    }
  }
}

TEST_CASE("affine transforms") {
  CHECK(affine_transform(Barcode{{0.0, 1.0}}, 1.0, 0.0) == Barcode{{0.0, 1.0}});
  CHECK(affine_transform(Barcode{{0.0, 1.0}, {2.0, 3.0}}, 2.0, 1.0) ==
        Barcode{{1.0, 3.0}, {5.0, 7.0}});
  CHECK(kind_of([] { affine_transform(kB1, 0.0, 1.0); }) == ErrorKind::InvalidScale);
  CHECK(kind_of([] { affine_transform(kB1, -2.0, 1.0); }) == ErrorKind::InvalidScale);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto b = support::random_barcode(5, seed);
    const auto t = affine_transform(b, 0.5, -3.0);
    CHECK(is_k_strict(t, 0));
    CHECK(interval_graph(t) == interval_graph(b));
  }
}

TEST_CASE("birth order and containing bar") {
  CHECK(birth_order(Barcode{{2.0, 3.0}, {0.0, 1.0}, {1.0, 4.0}}) ==
        std::vector<std::size_t>{2, 3, 1});
  CHECK(containing_bar(Barcode{{1.0, 2.0}, {0.0, 5.0}, {3.0, 4.0}}) == 2);
  CHECK(containing_bar(kB1) == 0);
  const Barcode r = kB1.reordered(std::vector<std::size_t>{2, 1, 3});
  CHECK(r.bar(1) == kB1.bar(2));
}

TEST_CASE("generator") {
  GenerateOptions g;
  g.n = 6;
  g.seed = 42;
  g.k = 3;
  CHECK(generate_barcode(g) == generate_barcode(g));
  CHECK(is_k_strict(generate_barcode(g), 3));
  g.contained = true;
  const auto c = generate_barcode(g);
  CHECK(containing_bar(c) == 1);
  g.n = 0;
  CHECK_THROWS_AS(generate_barcode(g), Error);
}
