// sturan: command-line front end for the theorem checks, the comparison
// examples and graph enumeration.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/error.hpp"
#include "sturan/graph6.hpp"
#include "sturan/report.hpp"
#include "sturan/verify.hpp"

namespace {

struct CheckArgs {
  std::string id;
  std::string n;
  std::string spec;
  int k = 0;
  int k_min = 1;
  int k_max = 6;
  std::string graph_class;
  std::string objective;
  std::uint64_t seed = 0;
  int restarts = 50;
  long long budget = 100'000;
  std::string format = "json";
  std::string out;
  bool revalidate = false;
  std::string cache_dir;
  int threads = 0;
};

int run_check_command(const CheckArgs& a) {
  sturan::CheckParams p;
  p.ns = sturan::parse_order_range(a.n);
  if (!a.spec.empty()) p.spec = sturan::LinearForestSpec::parse(a.spec);
  if (a.k > 0) p.k = a.k;
  p.k_min = a.k_min;
  p.k_max = a.k_max;
  if (!a.graph_class.empty()) p.graph_class = sturan::parse_graph_class(a.graph_class);
  if (!a.objective.empty()) p.objective = sturan::parse_objective(a.objective);
  p.seed = a.seed;
  p.restarts = a.restarts;
  p.budget = a.budget;
  p.revalidate = a.revalidate;
  p.cache_dir = a.cache_dir;
  p.threads = a.threads;

  const auto format = sturan::parse_report_format(a.format);
  const auto checks = sturan::run_check(a.id, p);
  sturan::emit_report(checks, format, a.out);

  std::vector<sturan::Verdict> verdicts;
  for (const auto& c : checks) {
    verdicts.push_back(c.verdict);
    std::string n = "?";
    for (const auto& [key, value] : c.params)
      if (key == "n") n = std::to_string(std::get<long long>(value));
    std::fprintf(stderr, "%s n=%s %s [%s]\n", c.theorem_id.c_str(), n.c_str(), c.verdict.to_string().c_str(),
                 sturan::to_string(c.mode).c_str());
    if (a.revalidate)
      for (const auto& problem : sturan::revalidate(c)) std::fprintf(stderr, "  revalidate: %s\n", problem.c_str());
  }
  return sturan::exit_code_for(verdicts);
}

int run_section5_command(const std::string& id, int h, int k, const sturan::Section5Params& base,
                         const std::string& format, const std::string& out) {
  sturan::Section5Params p = base;
  const bool uses_h = id == "1" || id == "2";
  p.parameter = uses_h ? h : k;
  if (p.parameter <= 0) throw sturan::ParameterError(std::string("example ") + id + " needs " + (uses_h ? "--h" : "--k"));
  const auto report = sturan::reproduce_section5(id, p);
  sturan::emit_report(report, sturan::parse_report_format(format), out);
  std::fprintf(stderr, "section5 %s %s\n", id.c_str(), report.verdict.to_string().c_str());
  return sturan::exit_code_for({report.verdict});
}

int run_enumerate_command(int n, const std::string& filter, const std::string& graph_class, const std::string& out,
                          int threads) {
  auto opts = sturan::class_options(sturan::parse_graph_class(graph_class));
  opts.threads = threads;
  if (!filter.empty()) {
    auto free_of = sturan::forest_free(sturan::LinearForestSpec::parse(filter));
    auto cls = opts.hereditary;
    opts.hereditary = cls ? sturan::GraphPredicate([cls, free_of](const sturan::Graph& g) { return cls(g) && free_of(g); })
                          : free_of;
  }
  std::vector<std::string> lines;
  sturan::enumerate_graphs(n, [&](const sturan::Graph& g) { lines.push_back(sturan::encode_graph6(g)); }, opts);
  if (out.empty() || out == "-") {
    for (const auto& l : lines) std::cout << l << '\n';
  } else {
    sturan::write_graph6_file(out, lines);
  }
  std::fprintf(stderr, "%zu graphs\n", lines.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and edge Turan checks for forbidden linear forests"};
  app.set_version_flag("--version", STURAN_VERSION);
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Check one theorem over a range of orders");
  check->add_option("theorem_id", ca.id, "One of the theorem ids")
      ->required()
      ->check(CLI::IsMember(sturan::theorem_ids()));
  check->add_option("--n", ca.n, "Order: 9, 3..9 or 3,5,8")->required();
  check->add_option("--spec", ca.spec, "Forbidden linear forest as path orders, e.g. 4,2");
  check->add_option("--k", ca.k, "Number of P3 copies for the k*P3 theorems");
  check->add_option("--k-min", ca.k_min, "Smallest h,k for rho-closed-forms");
  check->add_option("--k-max", ca.k_max, "Largest h,k for rho-closed-forms");
  check->add_option("--class", ca.graph_class, "all | bipartite | connected");
  check->add_option("--objective", ca.objective, "edges | rho");
  check->add_option("--seed", ca.seed, "Search seed");
  check->add_option("--restarts", ca.restarts, "Search restarts (also sample count for bound checks)");
  check->add_option("--budget", ca.budget, "Containment checks per restart");
  check->add_option("--format", ca.format, "json | csv");
  check->add_option("--out", ca.out, "Report path (stdout if omitted)");
  check->add_flag("--revalidate", ca.revalidate, "Decode and reconfirm every witness");
  check->add_option("--cache-dir", ca.cache_dir, "Witness cache directory");
  check->add_option("--threads", ca.threads, "Enumeration worker threads (0 = all cores)");

  std::string s5_id, s5_format = "json", s5_out;
  int s5_h = 0, s5_k = 0;
  sturan::Section5Params s5;
  auto* section5 = app.add_subcommand("section5", "Reproduce a discussion example");
  section5->add_option("example", s5_id, "1 | 2 | 3 | 4 | prop5")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "prop5"}));
  // "-h" would collide with --h.
  section5->set_help_flag("--help", "Print this help message and exit");
  section5->add_option("--h", s5_h, "h for Examples 1 and 2");
  section5->add_option("--k", s5_k, "k for Examples 3, 4 and prop5");
  section5->add_option("--n", s5.n, "Order")->required();
  section5->add_option("--seed", s5.seed, "Sampling seed (prop5)");
  section5->add_option("--samples", s5.samples, "Sample count (prop5)");
  section5->add_option("--format", s5_format, "json | csv");
  section5->add_option("--out", s5_out, "Report path (stdout if omitted)");

  int en_n = 0, en_threads = 0;
  std::string en_filter, en_class = "all", en_out;
  auto* enumerate = app.add_subcommand("enumerate", "List graphs up to isomorphism as graph6");
  enumerate->add_option("--n", en_n, "Order")->required();
  enumerate->add_option("--filter", en_filter, "Keep only graphs free of this linear forest");
  enumerate->add_option("--class", en_class, "all | bipartite | connected");
  enumerate->add_option("--out", en_out, "graph6 output file (stdout if omitted)");
  enumerate->add_option("--threads", en_threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : sturan::kExitError;
  }

  try {
    if (*check) return run_check_command(ca);
    if (*section5) return run_section5_command(s5_id, s5_h, s5_k, s5, s5_format, s5_out);
    return run_enumerate_command(en_n, en_filter, en_class, en_out, en_threads);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return sturan::kExitError;
  }
}
