#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"

using namespace sturan;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

TEST_CASE("family examples") {
  const Graph s = build_family(family::SplitS{10, 2});
  CHECK(s.edge_count() == 17);
  CHECK(sorted_degrees(s) == std::vector<int>{9, 9, 2, 2, 2, 2, 2, 2, 2, 2});

  CHECK(build_family(family::FKernel{9, 2}).edge_count() == 12);

  const Graph broom = build_family(family::Broom{7, 2});
  CHECK(broom.order() == 7);
  CHECK(broom.edge_count() == 6);
  CHECK(is_connected(broom));

  const Graph k1 = build_family(family::Complete{1});
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("documented labelings") {
  const Graph s = build_family(family::SplitSPlus{8, 3});
  for (int c = 0; c < 3; ++c) CHECK(s.degree(c) == 7);
  CHECK(s.adjacent(3, 4));
  CHECK(s.edge_count() == build_family(family::SplitS{8, 3}).edge_count() + 1);

  const Graph f = build_family(family::FKernel{9, 3});
  CHECK(f.degree(0) == 8);
  CHECK(f.degree(1) == 8);
  CHECK(f.adjacent(2, 3));
  CHECK(f.adjacent(4, 5));
  CHECK_FALSE(f.adjacent(3, 4));
  CHECK(f.degree(8) == 2);

  const Graph b = build_family(family::Broom{8, 2});
  CHECK(b.degree(0) == 5);
  CHECK(b.adjacent(1, 2));
  CHECK(b.adjacent(3, 4));
  CHECK(b.degree(5) == 1);

  const Graph star = build_family(family::Star{5});
  CHECK(star.degree(0) == 4);

  const Graph kab = build_family(family::CompleteBipartite{2, 4});
  CHECK(kab.degree(0) == 4);
  CHECK(kab.degree(2) == 2);
  CHECK_FALSE(kab.adjacent(0, 1));

  const Graph t = build_family(family::TuranGraph{7, 3});
  CHECK(t.edge_count() == 16);
  CHECK_FALSE(t.adjacent(0, 1));
  CHECK_FALSE(t.adjacent(1, 2));
  CHECK(t.adjacent(2, 3));
}

TEST_CASE("split graph edge counts") {
  for (int n = 4; n <= 32; ++n)
    for (int h = 2; h <= n - 2; ++h) {
      const long long e = static_cast<long long>(h) * n - (static_cast<long long>(h) * h + h) / 2;
      REQUIRE(oracle::edges(build_family(family::SplitS{n, h})) == e);
      REQUIRE(oracle::edges(build_family(family::SplitSPlus{n, h})) == e + 1);
    }
}

TEST_CASE("F kernel edge counts") {
  for (int n = 2; n <= 60; ++n)
    for (int k = 1; k < n; ++k) {
      const long long m = n - k + 1;
      const long long e = choose2(k - 1) + m * (k - 1) + m / 2;
      const Graph g = build_family(family::FKernel{n, k});
      REQUIRE(oracle::edges(g) == e);
      check_invariants(g);
    }
}

TEST_CASE("brooms are trees") {
  for (int n = 1; n <= 60; ++n)
    for (int s = 0; s <= (n - 1) / 2; ++s) {
      const Graph g = build_family(family::Broom{n, s});
      REQUIRE(oracle::edges(g) == n - 1);
      REQUIRE(is_connected(g));
    }
}

TEST_CASE("parameter bounds are enforced") {
  CHECK_THROWS_AS(build_family(family::Broom{7, 4}), ParameterError);
  CHECK_THROWS_AS(build_family(family::Broom{7, -1}), ParameterError);
  CHECK_THROWS_AS(build_family(family::SplitS{5, 0}), ParameterError);
  CHECK_THROWS_AS(build_family(family::SplitS{5, 5}), ParameterError);
  CHECK_THROWS_AS(build_family(family::SplitSPlus{5, 4}), ParameterError);
  CHECK_THROWS_AS(build_family(family::FKernel{5, 0}), ParameterError);
  CHECK_THROWS_AS(build_family(family::FKernel{5, 5}), ParameterError);
  CHECK_THROWS_AS(build_family(family::TuranGraph{5, 0}), ParameterError);
  CHECK_THROWS_AS(build_family(family::TuranGraph{5, 6}), ParameterError);
  CHECK_THROWS_AS(build_family(family::Complete{-1}), ParameterError);
  CHECK_THROWS_AS(build_family(family::Complete{kMaxOrder + 1}), SizeCapError);
  try {
    build_family(family::Broom{7, 4});
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("s <=") != std::string::npos);
  }
}

TEST_CASE("family identities up to isomorphism") {
  CHECK(isomorphic(build_family(family::FKernel{4, 1}), near_perfect_matching(4)));
  CHECK(isomorphic(build_family(family::FKernel{5, 2}),
                   join(complete_graph(1), k_copies(2, complete_graph(2)))));
  CHECK(isomorphic(build_family(family::Star{6}), build_family(family::CompleteBipartite{1, 5})));
  CHECK(isomorphic(build_family(family::Broom{5, 2}), build_family(family::Path{5})));
  CHECK(isomorphic(build_family(family::SplitS{6, 1}), build_family(family::Star{6})));
  CHECK(isomorphic(build_family(family::TuranGraph{6, 2}), build_family(family::CompleteBipartite{3, 3})));
  CHECK(build_family(family::EmptyGraph{3}) == empty_graph(3));
}

TEST_CASE("circulants") {
  const Graph c = circulant(9, 2);
  for (int v = 0; v < 9; ++v) CHECK(c.degree(v) == 4);
  CHECK(c.edge_count() == 18);
  CHECK_THROWS_AS(circulant(4, 2), ParameterError);

  const Graph b = bipartite_circulant(12, 2);
  CHECK(is_bipartite(b));
  for (int v = 0; v < 12; ++v) CHECK(b.degree(v) == 4);
  CHECK_THROWS_AS(bipartite_circulant(11, 2), ParameterError);
  CHECK_THROWS_AS(bipartite_circulant(6, 2), ParameterError);
}

TEST_CASE("describe names the family") {
  CHECK(describe(family::SplitS{10, 2}) == "S_{10,2}");
  CHECK(describe(family::FKernel{9, 2}) == "F_{9,2}");
}
