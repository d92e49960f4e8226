#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph6.hpp"
#include "sturan/report.hpp"
#include "sturan/spectral.hpp"
#include "sturan/verify.hpp"

using namespace sturan;
namespace fs = std::filesystem;

namespace {

CheckParams orders(const std::string& range) {
  CheckParams p;
  p.ns = parse_order_range(range);
  return p;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sturan_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("theorem ids") {
  const auto& ids = theorem_ids();
  CHECK(ids.size() == 10);
  CHECK(std::find(ids.begin(), ids.end(), "ex-kp3") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "sqrt-e-bound") != ids.end());
}

TEST_CASE("order ranges") {
  CHECK(parse_order_range("7") == std::vector<int>{7});
  CHECK(parse_order_range("3..6") == std::vector<int>{3, 4, 5, 6});
  CHECK(parse_order_range("3,5,8") == std::vector<int>{3, 5, 8});
  CHECK_THROWS_AS(parse_order_range(""), ParameterError);
  CHECK_THROWS_AS(parse_order_range("9..3"), ParameterError);
  CHECK_THROWS_AS(parse_order_range("x"), ParameterError);
  CHECK_THROWS_AS(parse_order_range("4,,5"), ParameterError);
  CHECK_THROWS_AS(parse_order_range("0"), ParameterError);
  CHECK_THROWS_AS(parse_order_range("3..q"), ParameterError);
}

TEST_CASE("verdict strings and exit codes") {
  CHECK(Verdict::pass().to_string() == "Pass");
  CHECK(Verdict::fail().to_string() == "Fail");
  CHECK(Verdict::unknown("budget").to_string() == "Unknown(budget)");
  CHECK(exit_code_for({}) == 0);
  CHECK(exit_code_for({Verdict::pass(), Verdict::pass()}) == 0);
  CHECK(exit_code_for({Verdict::pass(), Verdict::unknown("x")}) == 2);
  CHECK(exit_code_for({Verdict::unknown("x"), Verdict::fail()}) == 1);
  CHECK(exit_code_for({Verdict::fail()}) == 1);
  CHECK(kExitError == 3);
}

TEST_CASE("ex-kp3 holds exhaustively for two paths") {
  auto p = orders("3..9");
  p.k = 2;
  const auto checks = run_check("ex-kp3", p);
  REQUIRE(checks.size() == 7);
  for (const auto& c : checks) {
    CHECK(c.verdict == Verdict::pass());
    CHECK(c.mode == CheckMode::Exhaustive);
    CHECK(c.computed_exact == c.formula_value.exact);
    CHECK(c.witnesses_found == c.witnesses_expected);
    CHECK(revalidate(c).empty());
  }
  CHECK(checks.back().witnesses_found.size() == 2);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(run_check("no-such-claim", orders("5")), ParameterError);
  CHECK_THROWS_AS(run_check("ex-kp3", CheckParams{}), ParameterError);
  CHECK_THROWS_AS(run_check("ex-kp3", orders("5")), ParameterError);
  CHECK_THROWS_AS(run_check("ex-linear-forest", orders("5")), ParameterError);
  auto wrong_class = orders("5");
  wrong_class.k = 2;
  wrong_class.graph_class = GraphClass::Bipartite;
  CHECK_THROWS_AS(run_check("ex-kp3", wrong_class), ParameterError);
  auto kp3_spec = orders("8");
  kp3_spec.spec = LinearForestSpec::parse("3,3");
  CHECK_THROWS_AS(run_check("ex-linear-forest", kp3_spec), ParameterError);
  // A spec made of 3s stands in for k.
  const auto via_spec = run_check("ex-kp3", kp3_spec);
  CHECK(via_spec.front().verdict == Verdict::pass());
}

TEST_CASE("ex-linear-forest and spectral checks") {
  auto p = orders("6..8");
  p.spec = LinearForestSpec::parse("4,2");
  for (const auto& c : run_check("ex-linear-forest", p)) {
    CHECK(c.mode == CheckMode::Exhaustive);
    CHECK(c.verdict.kind != Verdict::Kind::Unknown);
    CHECK(revalidate(c).empty());
  }
  auto q = orders("6");
  q.spec = LinearForestSpec::parse("2,2");
  const auto rho = run_check("spec-linear-forest", q);
  CHECK(rho.front().mode == CheckMode::Exhaustive);
  CHECK(std::fabs(rho.front().computed_value - std::sqrt(5.0)) <= 1e-9);
  CHECK_FALSE(rho.front().computed_exact.has_value());
}

TEST_CASE("closed forms agree with the eigensolver") {
  auto p = orders("20,50");
  const auto checks = run_check("rho-closed-forms", p);
  REQUIRE(checks.size() == 2);
  for (const auto& c : checks) {
    CHECK(c.verdict == Verdict::pass());
    CHECK(c.mode == CheckMode::FormulaOnly);
    CHECK(std::fabs(c.computed_value - c.formula_value.value) <= 1e-8);
  }
  CHECK_THROWS_AS(run_check("rho-closed-forms", orders("1")), ParameterError);
}

TEST_CASE("universal bounds") {
  const auto hong = run_check("hong-bound", orders("1..6"));
  for (const auto& c : hong) CHECK(c.verdict == Verdict::pass());
  const auto root = run_check("sqrt-e-bound", orders("2..7"));
  for (const auto& c : root) {
    CHECK(c.verdict == Verdict::pass());
    CHECK(revalidate(c).empty());
  }
  auto big = orders("30");
  big.restarts = 20;
  const auto sampled = run_check("sqrt-e-bound", big);
  CHECK(sampled.front().mode == CheckMode::Stochastic);
  CHECK(sampled.front().verdict == Verdict::pass());
}

TEST_CASE("least eigenvalue over k*P3-free graphs") {
  auto p = orders("5..8");
  p.k = 2;
  const auto checks = run_check("least-eig", p);
  for (const auto& c : checks) {
    const int n = static_cast<int>(std::get<long long>(c.params.front().second));
    double best = 0.0;
    for (const Graph& g : enumerate_graphs(n))
      if (!oracle::brute_contains(g, {3, 3})) best = std::min(best, spectrum(g).back());
    CHECK(c.mode == CheckMode::Exhaustive);
    CHECK(std::fabs(c.computed_value - best) <= 1e-8);
    const bool at_bound = std::fabs(best + std::sqrt(n - 1.0)) <= 1e-8;
    if (!at_bound) CHECK(c.verdict == Verdict::fail());
    if (c.verdict == Verdict::pass()) CHECK(c.witnesses_found == c.witnesses_expected);
    CHECK(revalidate(c).empty());
  }
  // Every graph on five vertices is 2*P3-free, and K_{2,3} goes below -2.
  CHECK(checks.front().verdict == Verdict::fail());
  CHECK(std::fabs(checks.front().computed_value + std::sqrt(6.0)) <= 1e-8);
}

TEST_CASE("stochastic mode") {
  auto p = orders("14");
  p.k = 2;
  p.restarts = 5;
  p.budget = 5000;
  const auto c = run_check("spec-bip-kp3", p).front();
  CHECK(c.mode == CheckMode::Stochastic);
  CHECK(c.verdict.kind != Verdict::Kind::Fail);
  CHECK(c.computed_value <= c.formula_value.value + 1e-9);
  CHECK(revalidate(c).empty());
  const auto again = run_check("spec-bip-kp3", p).front();
  CHECK(render_check(c) == render_check(again));
  bool has_seed = false;
  for (const auto& [k, v] : c.params) has_seed = has_seed || k == "seed";
  CHECK(has_seed);
}

TEST_CASE("revalidation catches doctored witnesses") {
  auto p = orders("7");
  p.k = 2;
  auto c = run_check("ex-kp3", p).front();
  REQUIRE(revalidate(c).empty());
  c.witnesses_found.push_back(encode_graph6(complete_graph(7)));
  CHECK_FALSE(revalidate(c).empty());
  c.witnesses_found = {"not graph6 \x01"};
  CHECK_FALSE(revalidate(c).empty());
}

TEST_CASE("JSON reports") {
  auto p = orders("3..9");
  p.k = 2;
  const auto checks = run_check("ex-kp3", p);
  const std::string text = render_checks(checks, ReportFormat::Json);
  const auto doc = nlohmann::ordered_json::parse(text);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 7);
  const std::vector<std::string> keys{"theorem_id",         "params",          "formula_value", "computed_value",
                                      "witnesses_expected", "witnesses_found", "verdict",       "mode"};
  for (const auto& item : doc) {
    std::vector<std::string> got;
    for (auto it = item.begin(); it != item.end(); ++it) got.push_back(it.key());
    REQUIRE(got == keys);
    CHECK(item["verdict"] == "Pass");
    CHECK(item["params"].begin().key() == "n");
  }
  CHECK(render_checks(checks, ReportFormat::Json) == render_checks(run_check("ex-kp3", p), ReportFormat::Json));

  const auto closed = run_check("rho-closed-forms", orders("20"));
  const auto one = nlohmann::json::parse(render_check(closed.front()));
  const double value = one["computed_value"].get<double>();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", closed.front().computed_value);
  CHECK(value == std::strtod(buf, nullptr));
}

TEST_CASE("CSV reports round trip") {
  auto p = orders("5,6");
  p.k = 2;
  const auto checks = run_check("ex-kp3", p);
  const auto rows = parse_csv(render_checks(checks, ReportFormat::Csv));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].front() == "theorem_id");
  CHECK(rows[0].size() == 10);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 10);
    CHECK(rows[i][0] == "ex-kp3");
    CHECK(rows[i][1].rfind("n=", 0) == 0);
    CHECK(rows[i][8] == "Pass");
    CHECK(rows[i][9] == "Exhaustive");
  }
  CHECK(parse_csv("a,\"b,\"\"c\"\"\"\n") == std::vector<std::vector<std::string>>{{"a", "b,\"c\""}});
  CHECK_THROWS_AS(parse_report_format("xml"), ParameterError);
}

TEST_CASE("reports written to files") {
  const fs::path dir = scratch_dir("report");
  auto p = orders("5");
  p.k = 2;
  emit_report(run_check("ex-kp3", p), ReportFormat::Json, dir / "out.json");
  std::ifstream in(dir / "out.json");
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc.size() == 1);
  CHECK_THROWS_AS(emit_report(run_check("ex-kp3", p), ReportFormat::Json, dir / "missing" / "out.json"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("comparison examples") {
  for (const char* id : {"1", "2", "3", "4"})
    for (int param : {2, 3})
      for (int n : {100, 200}) {
        Section5Params sp;
        sp.parameter = param;
        sp.n = n;
        const auto r = reproduce_section5(id, sp);
        CHECK(r.verdict == Verdict::pass());
        CHECK(r.inequalities_expected.size() == 2);
        CHECK(r.inequalities_observed.size() == 2);
      }
  Section5Params prop;
  prop.parameter = 3;
  prop.n = 100;
  prop.samples = 50;
  const auto r = reproduce_section5("prop5", prop);
  CHECK(r.verdict == Verdict::pass());
  CHECK(r.inequalities_expected.size() == 3);
  CHECK_THROWS_AS(reproduce_section5("6", prop), ParameterError);
  prop.n = 11;
  CHECK_THROWS_AS(reproduce_section5("prop5", prop), ParameterError);
  Section5Params tiny;
  tiny.n = 3;
  CHECK_THROWS_AS(reproduce_section5("1", tiny), ParameterError);
}

TEST_CASE("clique padded construction") {
  // 10 = C(5,2) + 0 and 12 = C(5,2) + 2.
  const Graph a = clique_padded_example(8, 10);
  CHECK(a.order() == 8);
  CHECK(a.edge_count() == 10);
  const Graph b = clique_padded_example(8, 12);
  CHECK(b.edge_count() == 12);
  CHECK(b.max_degree() == 5);
  CHECK_THROWS_AS(clique_padded_example(5, 10), ParameterError);
}

TEST_CASE("witness cache") {
  const fs::path dir = scratch_dir("cache");
  const auto f = LinearForestSpec::parse("3,3");
  CHECK_FALSE(load_cached_report(dir, 8, f, Objective::Edges, GraphClass::All).has_value());

  auto p = orders("8");
  p.k = 2;
  p.cache_dir = dir;
  const auto first = run_check("ex-kp3", p).front();
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.is_regular_file() ? 1 : 0;
  CHECK(files == 2);
  const auto hit = load_cached_report(dir, 8, f, Objective::Edges, GraphClass::All);
  REQUIRE(hit.has_value());
  CHECK(hit->optimum == static_cast<double>(*first.computed_exact));
  CHECK(hit->witnesses == first.witnesses_found);
  const auto second = run_check("ex-kp3", p).front();
  CHECK(render_check(first) == render_check(second));
  CHECK_FALSE(load_cached_report(dir, 8, f, Objective::SpectralRadius, GraphClass::All).has_value());

  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".g6") {
      std::ofstream out(e.path(), std::ios::trunc);
      out << encode_graph6(complete_graph(8)) << "\n";
    }
  CHECK_FALSE(load_cached_report(dir, 8, f, Objective::Edges, GraphClass::All).has_value());
  const auto third = run_check("ex-kp3", p).front();
  CHECK(third.verdict == Verdict::pass());

  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") {
      std::ofstream out(e.path(), std::ios::trunc);
      out << "{ not json";
    }
  CHECK_FALSE(load_cached_report(dir, 8, f, Objective::Edges, GraphClass::All).has_value());
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  CHECK(resolve_cache_dir("/tmp/x") == fs::path("/tmp/x"));
  ::setenv("SPECTRAL_TURAN_CACHE", "/tmp/y", 1);
  CHECK(resolve_cache_dir("") == fs::path("/tmp/y"));
  ::unsetenv("SPECTRAL_TURAN_CACHE");
  CHECK(resolve_cache_dir("").empty());
}
