#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph6.hpp"

using namespace sturan;

namespace {

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph hypercube(int d) {
  GraphBuilder b(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int i = 0; i < d; ++i)
      if (v < (v ^ (1 << i))) b.add_edge(v, v ^ (1 << i));
  return b.build();
}

// Paley graph on a prime q = 1 mod 4.
Graph paley(int q) {
  std::set<int> squares;
  for (int x = 1; x < q; ++x) squares.insert(x * x % q);
  GraphBuilder b(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (squares.count((v - u) % q)) b.add_edge(u, v);
  return b.build();
}

}  // namespace

TEST_CASE("the form is a valid canonical relabeling") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(1 + t % 12, 0.4, rng);
    const auto lab = canonical_labeling(g);
    REQUIRE(lab.position.size() == static_cast<std::size_t>(g.order()));
    REQUIRE(relabel(g, lab.position) == decode_graph6(lab.form));
    REQUIRE(canonical_graph(g) == decode_graph6(lab.form));
    for (const auto& gamma : lab.automorphisms) REQUIRE(relabel(g, gamma) == g);
  }
}

TEST_CASE("invariance under random relabeling") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 24;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * ((t * 37) % 100) / 100.0, rng);
    const std::string form = canonical_form(g);
    for (int r = 0; r < 3; ++r) {
      const auto perm = oracle::random_permutation(n, rng);
      REQUIRE(canonical_form(relabel(g, perm)) == form);
    }
  }
}

TEST_CASE("highly symmetric graphs") {
  std::mt19937_64 rng(6);
  const Graph graphs[] = {petersen(),           hypercube(4),      hypercube(5),      paley(13),
                          paley(29),            complete_graph(9), empty_graph(9),    build_family(family::Star{60}),
                          circulant(30, 3),     build_family(family::CompleteBipartite{7, 9}),
                          k_copies(5, complete_graph(3)), build_family(family::SplitSPlus{40, 3})};
  for (const Graph& g : graphs) {
    const std::string form = canonical_form(g);
    for (int r = 0; r < 5; ++r) REQUIRE(canonical_form(relabel(g, oracle::random_permutation(g.order(), rng))) == form);
  }
}

TEST_CASE("regular graphs that refinement cannot split are told apart") {
  CHECK_FALSE(isomorphic(circulant(6, 1), k_copies(2, complete_graph(3))));
  // Triangular prism versus K_{3,3}.
  GraphBuilder prism(6);
  for (int i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(3 + i, 3 + (i + 1) % 3);
    prism.add_edge(i, i + 3);
  }
  CHECK_FALSE(isomorphic(prism.build(), build_family(family::CompleteBipartite{3, 3})));
  // Petersen versus the 5-prism: both cubic on 10 vertices.
  GraphBuilder p5(10);
  for (int i = 0; i < 5; ++i) {
    p5.add_edge(i, (i + 1) % 5);
    p5.add_edge(5 + i, 5 + (i + 1) % 5);
    p5.add_edge(i, i + 5);
  }
  CHECK_FALSE(isomorphic(petersen(), p5.build()));
  CHECK_FALSE(isomorphic(circulant(12, 1), k_copies(2, circulant(6, 1))));
}

TEST_CASE("classes of labeled graphs agree with the brute-force form") {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::string, std::string> by_brute;
    std::set<std::string> forms;
    for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      const std::string brute = oracle::brute_form(g);
      const std::string form = canonical_form(g);
      auto [it, inserted] = by_brute.emplace(brute, form);
      REQUIRE(it->second == form);
      forms.insert(form);
    }
    REQUIRE(forms.size() == by_brute.size());
    if (n == 4) CHECK(forms.size() == 11);
  }
}

TEST_CASE("isomorphism on random pairs matches brute force") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 5;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    Graph b = oracle::random_graph(n, 0.5, rng);
    if (t % 3 == 0) b = relabel(a, oracle::random_permutation(n, rng));
    REQUIRE(isomorphic(a, b) == oracle::brute_isomorphic(a, b));
  }
  CHECK_FALSE(isomorphic(complete_graph(3), complete_graph(4)));
}

TEST_CASE("orbits") {
  const Graph p4 = build_family(family::Path{4});
  CHECK(same_orbit(p4, 0, 3));
  CHECK(same_orbit(p4, 1, 2));
  CHECK_FALSE(same_orbit(p4, 0, 1));
  const Graph star = build_family(family::Star{5});
  CHECK(same_orbit(star, 1, 4));
  CHECK_FALSE(same_orbit(star, 0, 1));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int u = pick(rng), v = pick(rng);
    REQUIRE(same_orbit(g, u, v) == oracle::brute_same_orbit(g, u, v));
  }
}

TEST_CASE("root cells separate non-equivalent vertices") {
  const Graph g = build_family(family::Broom{9, 2});
  const auto lab = canonical_labeling(g);
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v)
      if (lab.root_cell[u] != lab.root_cell[v]) REQUIRE_FALSE(oracle::brute_same_orbit(g, u, v));
}

TEST_CASE("colours restrict the isomorphisms") {
  const Graph p3 = build_family(family::Path{3});
  const std::vector<int> end_marked{1, 0, 0};
  const std::vector<int> other_end{0, 0, 1};
  const std::vector<int> middle{0, 1, 0};
  CHECK(canonical_labeling(p3, end_marked).form == canonical_labeling(p3, other_end).form);
  CHECK(canonical_labeling(p3, end_marked).form != canonical_labeling(p3, middle).form);
  CHECK_THROWS_AS(canonical_labeling(p3, std::vector<int>{0, 1}), ParameterError);
}

TEST_CASE("order cap") {
  CHECK(canonical_form(empty_graph(0)) == "?");
  CHECK_NOTHROW(canonical_form(empty_graph(kCanonicalMaxOrder)));
  CHECK_THROWS_AS(canonical_form(empty_graph(kCanonicalMaxOrder + 1)), SizeCapError);
}
