#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/formulas.hpp"
#include "sturan/spectral.hpp"

using namespace sturan;
using doctest::Approx;

namespace {

LinearForestSpec spec(const char* text) { return LinearForestSpec::parse(text); }

double top_eigenvalue(const Graph& g) { return spectrum(g).front(); }

}  // namespace

TEST_CASE("Turan numbers for linear forests") {
  CHECK(*ex_linear_forest(20, spec("4,2")).exact == 37);
  // h = 2 + 1 - 1 = 2, all parts odd: C(2,2) + 2*18 + 1.
  CHECK(*ex_linear_forest(20, spec("5,3")).exact == 38);
  CHECK(*ex_linear_forest(20, spec("5,3,3")).exact == 3 + 3 * 17 + 1);
  for (int n = 3; n <= 30; ++n) CHECK(*ex_linear_forest(n, spec("2,2")).exact == n - 1);
  CHECK(ex_linear_forest(20, spec("4,2")).validity.kind == Validity::Kind::AsymptoticOnly);
  CHECK_FALSE(ex_linear_forest(20, spec("4,2")).validity.proven_at(1000));
  CHECK_THROWS_AS(ex_linear_forest(20, spec("3,3")), PreconditionError);
  CHECK_THROWS_AS(ex_linear_forest(20, spec("5")), ParameterError);
}

TEST_CASE("Turan numbers for k copies of P3") {
  CHECK(*ex_kp3(5, 2).exact == 10);
  CHECK(*ex_kp3(7, 2).exact == 11);
  CHECK(*ex_kp3(9, 2).exact == 12);
  CHECK(ex_kp3(9, 2).validity == Validity::unconditional());
  // Every branch against the graph it describes.
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 40; ++n) {
      long long expected;
      if (n < 3 * k) {
        expected = oracle::edges(complete_graph(n));
      } else if (n <= 5 * k - 1) {
        expected = oracle::edges(disjoint_union(complete_graph(3 * k - 1), near_perfect_matching(n - 3 * k + 1)));
        if (n == 5 * k - 1) expected = std::max(expected, oracle::edges(build_family(family::FKernel{n, k})));
      } else {
        expected = oracle::edges(build_family(family::FKernel{n, k}));
      }
      REQUIRE(*ex_kp3(n, k).exact == expected);
    }
  CHECK_THROWS_AS(ex_kp3(0, 2), ParameterError);
  CHECK_THROWS_AS(ex_kp3(5, 0), ParameterError);
}

TEST_CASE("bipartite Turan numbers") {
  CHECK(*ex_bipartite_kp3(18, 2).exact == 17);
  CHECK(*ex_bipartite_kp3(29, 3).exact == 54);
  for (int n = 2; n <= 40; ++n) CHECK(*ex_bipartite_kp3(n, 2).exact == n - 1);
  CHECK(ex_bipartite_kp3(29, 3).validity.proven_at(29));
  CHECK_FALSE(ex_bipartite_kp3(28, 3).validity.proven_at(28));
  CHECK_THROWS_AS(ex_bipartite_kp3(10, 1), ParameterError);
}

TEST_CASE("h parameter") {
  CHECK(h_parameter(spec("3,3")) == 1);
  CHECK(h_parameter(spec("5,3,3")) == 3);
  CHECK(h_parameter(spec("2,2")) == 1);
}

TEST_CASE("spectral radius of split graphs") {
  CHECK(rho_s(10, 2).value == Approx((1 + std::sqrt(65.0)) / 2).epsilon(1e-14));
  CHECK(rho_s(20, 3).value == Approx(1 + std::sqrt(52.0)).epsilon(1e-14));
  for (int n = 2; n <= 50; ++n) CHECK(rho_s(n, 1).value == Approx(std::sqrt(n - 1.0)).epsilon(1e-14));
  CHECK(std::fabs(rho_s(10, 2).value - spectral_radius(build_family(family::SplitS{10, 2})).value) <= 1e-9);
  CHECK(std::fabs(rho_s(20, 3).value - top_eigenvalue(build_family(family::SplitS{20, 3}))) <= 1e-9);
  CHECK(rho_s(10, 2).residual() <= 1e-9);
  CHECK_THROWS_AS(rho_s(3, 3), ParameterError);
  CHECK_THROWS_AS(rho_s(3, 0), ParameterError);
}

TEST_CASE("split graph radius agrees with the eigensolver") {
  for (int h = 1; h <= 6; ++h)
    for (int n = h + 1; n <= 120; n += 7) {
      const double r = rho_s(n, h).value;
      REQUIRE(std::fabs(r - spectral_radius(build_family(family::SplitS{n, h})).value) <= 1e-8);
    }
}

TEST_CASE("bound for the split graph plus an edge") {
  CHECK(rho_s_plus_bound(16, 2).value == Approx((1 + std::sqrt(115.0)) / 2).epsilon(1e-14));
  // 4*3*64 - (27 + 6 - 3) = 738.
  CHECK(rho_s_plus_bound(64, 3).value == Approx((2 + std::sqrt(738.0)) / 2).epsilon(1e-14));
  const auto b100 = rho_s_plus_bound(100, 2);
  CHECK(b100.value == Approx((1 + std::sqrt(787.0)) / 2).epsilon(1e-14));
  CHECK(spectral_radius(build_family(family::SplitSPlus{100, 2})).value < b100.value);
  CHECK(b100.validity == Validity::proven_from(16));
  CHECK_THROWS_AS(rho_s_plus_bound(15, 2), PreconditionError);
  CHECK_THROWS_AS(rho_s_plus_bound(100, 1), ParameterError);
}

TEST_CASE("exact radius of the split graph plus an edge") {
  for (int h = 1; h <= 5; ++h)
    for (int n = h + 2; n <= 80; n += 5) {
      const auto r = rho_s_plus(n, h);
      REQUIRE(r.residual() <= 1e-9);
      REQUIRE(std::fabs(r.value - top_eigenvalue(build_family(family::SplitSPlus{n, h}))) <= 1e-8);
      REQUIRE(r.value > rho_s(n, h).value);
      if (h >= 2 && n >= (1 << (2 * h)) && !(h == 2 && n <= 37)) REQUIRE(r.value < rho_s_plus_bound(n, h).value);
    }
}

TEST_CASE("the strict bound for the split graph plus an edge fails below n = 38 when h = 2") {
  for (int n = 16; n <= 37; ++n)
    REQUIRE(top_eigenvalue(build_family(family::SplitSPlus{n, 2})) > rho_s_plus_bound(n, 2).value);
  for (int n = 38; n <= 120; ++n)
    REQUIRE(top_eigenvalue(build_family(family::SplitSPlus{n, 2})) < rho_s_plus_bound(n, 2).value);
}

TEST_CASE("radius of the F kernel") {
  const auto f92 = rho_f(9, 2);
  CHECK(f92.value == Approx((1 + std::sqrt(33.0)) / 2).epsilon(1e-14));
  const auto f102 = rho_f(10, 2);
  CHECK(f102.polynomial == std::vector<long long>{1, -1, -9, 1});
  CHECK(f102.residual() <= 1e-12);
  CHECK(f102.value == Approx(3.494).epsilon(1e-3));
  CHECK(std::fabs(f102.value - top_eigenvalue(build_family(family::FKernel{10, 2}))) <= 1e-9);
  for (int n = 2; n <= 40; n += 2) CHECK(rho_f(n, 1).value == 1.0);
  CHECK(rho_f(7, 1).value == 1.0);
  CHECK_THROWS_AS(rho_f(5, 5), ParameterError);
}

TEST_CASE("F kernel radius bounds") {
  const auto [lo, hi] = rho_f_bounds(10, 2);
  // 4*10 - (12 - 4 - 1) = 33.
  CHECK(lo.value == Approx((1 + std::sqrt(33.0)) / 2).epsilon(1e-14));
  CHECK(hi.value == Approx((1 + std::sqrt(37.0)) / 2).epsilon(1e-14));
  CHECK(lo.value < rho_f(10, 2).value);
  CHECK(rho_f(10, 2).value <= hi.value);
  CHECK(rho_f_bounds(9, 2).second.value == rho_f(9, 2).value);
  const auto [lo50, hi50] = rho_f_bounds(50, 4);
  CHECK(std::isfinite(lo50.value));
  CHECK(lo50.value < hi50.value);
}

TEST_CASE("F kernel radius agrees with the eigensolver inside the sandwich") {
  for (int k = 1; k <= 6; ++k)
    for (int n = k + 1; n <= 120; n += (n < 30 ? 1 : 9)) {
      const auto r = rho_f(n, k);
      const auto [lo, hi] = rho_f_bounds(n, k);
      REQUIRE(std::fabs(r.value - spectral_radius(build_family(family::FKernel{n, k})).value) <= 1e-8);
      REQUIRE(lo.value < r.value);
      REQUIRE(r.value <= hi.value + 1e-12);
      if (!r.polynomial.empty()) REQUIRE(r.residual_at(r.value) <= 1e-9 * std::pow(r.value, 3));
    }
}

TEST_CASE("bipartite radius and least eigenvalue bounds") {
  CHECK(rho_bipartite_kp3(18, 2).value == Approx(std::sqrt(17.0)).epsilon(1e-14));
  CHECK(least_eigenvalue_bound(29, 3).value == Approx(-std::sqrt(54.0)).epsilon(1e-14));
  CHECK(least_eigenvalue_bound(29, 3).residual() <= 1e-12);
  CHECK(rho_bipartite_kp3(29, 3).validity == Validity::proven_from(29));
}

TEST_CASE("spectral extremal value chooses the right family") {
  CHECK(spectral_extremal_value(40, spec("4,2")).value == rho_s(40, 2).value);
  CHECK(spectral_extremal_value(40, spec("5,3")).value == rho_s_plus(40, 2).value);
  const auto kp3 = spectral_extremal_value(40, spec("3,3"));
  CHECK(kp3.value == rho_f(40, 2).value);
  CHECK(kp3.validity == Validity::proven_from(26));
  CHECK(kp3_spectral_threshold(2) == 26);
  CHECK_THROWS_AS(spectral_extremal_value(40, spec("7")), PreconditionError);
}

TEST_CASE("degree-constrained spectral bound") {
  for (int n = 2; n <= 30; ++n) CHECK(hong_bound(n * (n - 1) / 2, n, n - 1).value == Approx(n - 1.0).epsilon(1e-14));
  CHECK(hong_bound(17, 10, 2).value == Approx(rho_s(10, 2).value).epsilon(1e-14));
  CHECK(hong_bound(12, 9, 1).value == Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(hong_bound(0, 10, 5), ParameterError);
  CHECK_THROWS_AS(hong_bound(10, 10, 10), ParameterError);
  CHECK_THROWS_AS(hong_bound(10, 10, -1), ParameterError);
}

TEST_CASE("degree-constrained bound is non-increasing in the minimum degree") {
  for (int n = 2; n <= 24; ++n)
    for (long long e = 0; 2 * e <= static_cast<long long>(n) * (n - 1); ++e) {
      double previous = INFINITY;
      for (int d = 0; d <= n - 1; ++d) {
        const long long radicand = 8 * e - 4LL * d * n + (d + 1LL) * (d + 1LL);
        if (radicand < 0) continue;
        const double v = hong_bound(e, n, d).value;
        REQUIRE(v <= previous + 1e-12);
        previous = v;
      }
    }
}

TEST_CASE("root finder") {
  // (x-1)(x-2)(x-3)
  const std::vector<long long> p{1, -6, 11, -6};
  CHECK(static_cast<double>(largest_root_in(p, 2.5L, 10.0L)) == Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(largest_root_in(p, 4.0L, 10.0L), ParameterError);
}

TEST_CASE("extremal graph examples") {
  const auto k2 = extremal_graphs(9, spec("3,3"));
  REQUIRE(k2.graphs.size() == 2);
  CHECK(k2.edges == 12);
  const Graph a = disjoint_union(complete_graph(5), near_perfect_matching(4));
  const Graph b = build_family(family::FKernel{9, 2});
  CHECK(((isomorphic(k2.graphs[0], a) && isomorphic(k2.graphs[1], b)) ||
         (isomorphic(k2.graphs[0], b) && isomorphic(k2.graphs[1], a))));

  const auto s = extremal_graphs(20, spec("4,2"));
  REQUIRE(s.graphs.size() == 1);
  CHECK(isomorphic(s.graphs[0], build_family(family::SplitS{20, 2})));
  CHECK(s.validity.kind == Validity::Kind::AsymptoticOnly);

  const auto sp = extremal_graphs(20, spec("5,3"));
  REQUIRE(sp.graphs.size() == 1);
  CHECK(isomorphic(sp.graphs[0], build_family(family::SplitSPlus{20, 2})));

  CHECK_THROWS_AS(extremal_graphs(20, spec("6")), PreconditionError);
}

TEST_CASE("extremal graphs are F-free and reach the Turan number") {
  const char* specs[] = {"2,2", "3,2", "4,2", "3,3", "5,3", "4,4", "3,3,3", "5,3,3", "4,3,2", "6,4", "3,3,3,3"};
  for (const char* text : specs) {
    const auto f = spec(text);
    for (int n = f.total_order(); n <= 60; n += 3) {
      const auto fam = extremal_graphs(n, f);
      const long long target = f.all_three() ? *ex_kp3(n, f.k()).exact : *ex_linear_forest(n, f).exact;
      REQUIRE(fam.edges == target);
      for (const Graph& g : fam.graphs) {
        REQUIRE(oracle::edges(g) == target);
        REQUIRE_FALSE(contains_linear_forest(g, f));
      }
    }
  }
}

TEST_CASE("bipartite extremal graphs") {
  const auto brooms = extremal_bipartite_graphs(18, 2);
  CHECK(brooms.graphs.size() == 9);
  for (const Graph& g : brooms.graphs) {
    CHECK(oracle::edges(g) == 17);
    CHECK(is_bipartite(g));
    CHECK_FALSE(contains_linear_forest(g, spec("3,3")));
  }
  const auto k3 = extremal_bipartite_graphs(29, 3);
  REQUIRE(k3.graphs.size() == 1);
  CHECK(oracle::edges(k3.graphs[0]) == 54);
  CHECK_FALSE(contains_linear_forest(k3.graphs[0], spec("3,3,3")));
}
