#include <cmath>
#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "sturan/error.hpp"
#include "sturan/graph6.hpp"
#include "sturan/spectral.hpp"
#include "sturan/verify.hpp"

namespace sturan {

namespace {

namespace fs = std::filesystem;

std::string cache_key(int n, const LinearForestSpec& spec, Objective objective, GraphClass graph_class) {
  std::string parts;
  for (int a : spec.parts()) parts += (parts.empty() ? "" : "-") + std::to_string(a);
  return "n" + std::to_string(n) + "_f" + parts + "_" + to_string(objective) + "_" + to_string(graph_class);
}

bool witness_ok(const Graph& g, const ExtremalReport& r) {
  if (g.order() != r.n || contains_linear_forest(g, r.spec)) return false;
  if (r.graph_class == GraphClass::Bipartite && !is_bipartite(g)) return false;
  if (r.graph_class == GraphClass::Connected && !is_connected(g)) return false;
  if (r.objective == Objective::Edges) return static_cast<double>(g.edge_count()) == r.optimum;
  return std::fabs(spectral_radius(g).value - r.optimum) <= 2 * kSpectralTieTolerance;
}

}  // namespace

fs::path resolve_cache_dir(const fs::path& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("SPECTRAL_TURAN_CACHE"); env && *env) return fs::path(env);
  return {};
}

std::optional<ExtremalReport> load_cached_report(const fs::path& dir, int n, const LinearForestSpec& spec,
                                                 Objective objective, GraphClass graph_class) {
  const std::string key = cache_key(n, spec, objective, graph_class);
  const fs::path sidecar = dir / (key + ".json"), lines = dir / (key + ".g6");
  std::error_code ec;
  if (!fs::exists(sidecar, ec) || !fs::exists(lines, ec)) return std::nullopt;

  nlohmann::json meta;
  try {
    std::ifstream in(sidecar);
    meta = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (meta.value("n", -1) != n || meta.value("spec", std::string()) != spec.to_string() ||
      meta.value("objective", std::string()) != to_string(objective) ||
      meta.value("class", std::string()) != to_string(graph_class) || !meta.value("exhaustive", false) ||
      meta.value("tool_version", std::string()) != tool_version() || !meta.contains("optimum") ||
      !meta["optimum"].is_number())
    return std::nullopt;

  ExtremalReport r;
  r.n = n;
  r.spec = spec;
  r.objective = objective;
  r.graph_class = graph_class;
  r.optimum = meta["optimum"].get<double>();
  r.exhaustive = true;
  try {
    for (const Graph& g : read_graph6_file(lines)) {
      if (!witness_ok(g, r)) return std::nullopt;
      r.witnesses.push_back(encode_graph6(g));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (r.witnesses.empty()) return std::nullopt;
  return r;
}

void store_cached_report(const fs::path& dir, const ExtremalReport& report) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create cache directory", dir.string());
  const std::string key = cache_key(report.n, report.spec, report.objective, report.graph_class);
  write_graph6_file(dir / (key + ".g6"), report.witnesses);

  nlohmann::ordered_json meta;
  meta["n"] = report.n;
  meta["spec"] = report.spec.to_string();
  meta["objective"] = to_string(report.objective);
  meta["class"] = to_string(report.graph_class);
  meta["optimum"] = report.optimum;
  meta["exhaustive"] = report.exhaustive;
  meta["tool_version"] = tool_version();
  const fs::path sidecar = dir / (key + ".json");
  std::ofstream out(sidecar);
  if (!out) throw IoError("cannot write cache sidecar", sidecar.string());
  out << meta.dump(2) << '\n';
  if (!out) throw IoError("cannot write cache sidecar", sidecar.string());
}

}  // namespace sturan
