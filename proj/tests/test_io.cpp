#include <doctest.h>

#include <filesystem>

#include "barlat/error.hpp"
#include "barlat/io.hpp"
#include "support.hpp"

using namespace barlat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("csv barcodes") {
  const auto b = io::parse_barcode_csv("# B1\n1.0,2.0\n\n 1.5 , 3.0\n2.5,2.75");
  CHECK(b == Barcode{{1.0, 2.0}, {1.5, 3.0}, {2.5, 2.75}});
  CHECK(kind_of([] { io::parse_barcode_csv("1.0,2.0\n1.5\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_csv("1.0,2.0,3.0\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_csv("1.0,abc\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_csv("2.0,1.0\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_csv("# nothing\n"); }) == ErrorKind::Parse);
  try {
    io::parse_barcode_csv("0,1\n\n1,x\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("json barcodes") {
  CHECK(io::parse_barcode_json("[[1.5, 3], [1, 2]]") == Barcode{{1.5, 3.0}, {1.0, 2.0}});
  CHECK(kind_of([] { io::parse_barcode_json("[[1, 2, 3]]"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_json("{\"a\": 1}"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_json("[[1, \"2\"]]"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_json("[[1, 2]"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_barcode_json("[]"); }) == ErrorKind::Parse);
}

TEST_CASE("barcode round trips are exact") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = support::random_barcode(6, seed, 1);
    CHECK(io::parse_barcode_csv(io::barcode_to_csv(b)) == b);
    CHECK(io::parse_barcode_json(io::barcode_to_json(b)) == b);
  }
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(2.0) == "2");
}

TEST_CASE("files and formats") {
  const auto dir = std::filesystem::temp_directory_path() / "barlat_io_test";
  std::filesystem::create_directories(dir);
  const Barcode b{{0.0, 1.0}, {0.5, 2.0}};
  io::write_file(dir / "b.csv", io::barcode_to_csv(b));
  io::write_file(dir / "b.json", io::barcode_to_json(b));
  io::write_file(dir / "b.txt", io::barcode_to_json(b));
  CHECK(io::read_barcode(dir / "b.csv") == b);
  CHECK(io::read_barcode(dir / "b.json") == b);
  CHECK(kind_of([&] { io::read_barcode(dir / "b.txt"); }) == ErrorKind::Parse);
  CHECK(io::read_barcode(dir / "b.txt", io::BarcodeFormat::Json) == b);
  CHECK(kind_of([&] { io::read_file(dir / "missing.csv"); }) == ErrorKind::Parse);
  std::filesystem::remove_all(dir);
}

TEST_CASE("words") {
  CHECK(io::parse_word("1 2 1 3 3 2") == std::vector<int>{1, 2, 1, 3, 3, 2});
  CHECK(io::parse_word(" 1,2 ,2, 1 ") == std::vector<int>{1, 2, 2, 1});
  CHECK(kind_of([] { io::parse_word("1 0 1"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_word("1 2a"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_word("  "); }) == ErrorKind::Parse);
  const auto lines = io::parse_word_lines("# words\n1 2 1 2\n\n1 1 2 2\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].to_string() == "1 1 2 2");
  CHECK(kind_of([] { io::parse_word_lines("1 2 2\n"); }) == ErrorKind::Parse);

  const auto s = Multiperm::from_word({1, 2, 2, 1});
  CHECK(io::multiperm_to_json(s) == "{\"n\": 2, \"m\": 2, \"word\": [1, 2, 2, 1]}");
  CHECK(io::parse_multiperm_json(io::multiperm_to_json(s)) == s);
  CHECK(kind_of([] { io::parse_multiperm_json("{\"n\": 2}"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_multiperm_json("{\"n\": 2, \"m\": 1, \"word\": [1, 1]}"); }) ==
        ErrorKind::Parse);
}

TEST_CASE("diagram and report emitters") {
  const auto d = enumerate({2, 0});
  const auto dot = io::hasse_to_dot(d);
  CHECK(dot.find("n0 [label=\"1 1 2 2\\nrank 0\"];") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  CHECK(dot == io::hasse_to_dot(enumerate({2, 0})));
  CHECK(io::hasse_to_json(d) ==
        "{\"elements\": [[1, 1, 2, 2], [1, 2, 1, 2], [1, 2, 2, 1]], "
        "\"covers\": [[0, 1], [1, 2]], \"ranks\": [0, 1, 2]}\n");
  CHECK(io::vertices_to_csv(vertices({2, 0})) == "1,2,3,4\n1,3,2,4\n1,3,4,2\n");
  CHECK(io::vertices_to_json(vertices({1, 0})) == "{\"ambient\": 2, \"vertices\": [[1, 2]]}\n");
  CHECK(io::dimension_report_to_json(dimension_report({2, 1})) ==
        "{\"ambient\": 6, \"dim\": 4, \"expected\": 4, \"blocks\": 2}\n");
  ConvergenceReport r;
  r.d_inf = 0.5;
  r.pass = true;
  CHECK(io::convergence_report_to_json(r) ==
        "{\"d_inf\": 0.5, \"d_q\": 0, \"bound_inf\": 0, \"bound_q\": 0, "
        "\"alpha\": 1, \"delta\": 0, \"pass\": true}\n");
}
