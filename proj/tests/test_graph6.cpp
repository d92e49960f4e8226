#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph6.hpp"

using namespace sturan;

TEST_CASE("small encodings") {
  CHECK(encode_graph6(empty_graph(0)) == "?");
  CHECK(decode_graph6("?") == empty_graph(0));
  CHECK(encode_graph6(empty_graph(1)) == "@");
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(decode_graph6("Bw") == complete_graph(3));
  // P_3 as 0-1-2: pairs (0,1),(0,2),(1,2) -> bits 101.
  CHECK(encode_graph6(build_family(family::Path{3})) == "Bg");
  // Widely used reference value for the 5-cycle 0-1-2-3-4-0.
  GraphBuilder c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(encode_graph6(c5.build()) == "Dhc");
}

TEST_CASE("four-byte order header") {
  const std::string e63 = encode_graph6(empty_graph(63));
  CHECK(e63.substr(0, 4) == "~??~");
  CHECK(e63.size() == 4 + (63 * 62 / 2 + 5) / 6);
  CHECK(decode_graph6(e63) == empty_graph(63));
  const Graph big = complete_graph(300);
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("decoder rejects malformed input with offsets") {
  CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("B"), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("Bww"), Graph6Error);
  // Bits beyond the triangle must be zero: K_3 with a stray padding bit.
  try {
    decode_graph6("Bx");
    FAIL("expected padding error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 1);
  }
  try {
    decode_graph6("C\x20");
    FAIL("expected byte range error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 1);
  }
  // Four-byte header with an order that fits in one byte.
  CHECK_THROWS_AS(decode_graph6("~??B"), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("~?"), Graph6Error);
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(0, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    const std::string s = encode_graph6(g);
    for (char c : s) REQUIRE((c >= 63 && c <= 126));
    REQUIRE(decode_graph6(s) == g);
  }
}

TEST_CASE("round trip of every graph up to seven vertices") {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) REQUIRE(decode_graph6(encode_graph6(g)) == g);
}

TEST_CASE("file reading and writing") {
  const auto dir = std::filesystem::temp_directory_path() / "sturan_graph6_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "graphs.g6";
  write_graph6_file(path, {"Bw", "Bg"});
  auto graphs = read_graph6_file(path);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == complete_graph(3));

  {
    std::ofstream out(path);
    out << ">>graph6<<Bw\n\n@\n";
  }
  graphs = read_graph6_file(path);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == empty_graph(1));

  CHECK_THROWS_AS(read_graph6_file(dir / "missing.g6"), IoError);
  std::filesystem::remove_all(dir);
}
