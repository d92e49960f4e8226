#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sturan/enumerate.hpp"
#include "sturan/formulas.hpp"

namespace sturan {

inline const char* tool_version() { return STURAN_VERSION; }

using ParamValue = std::variant<long long, double, std::string>;
/// Insertion-ordered parameter map, emitted in this order.
using ParamMap = std::vector<std::pair<std::string, ParamValue>>;

struct Verdict {
  enum class Kind { Pass, Fail, Unknown };
  Kind kind = Kind::Unknown;
  std::string reason;  // Unknown only

  static Verdict pass() { return {Kind::Pass, {}}; }
  static Verdict fail() { return {Kind::Fail, {}}; }
  static Verdict unknown(std::string why) { return {Kind::Unknown, std::move(why)}; }
  /// "Pass", "Fail" or "Unknown(<reason>)".
  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Process exit status for a batch: 0 all Pass, 1 any Fail, 2 any Unknown and
/// no Fail. Errors that abort a run use 3.
int exit_code_for(const std::vector<Verdict>& verdicts);
inline constexpr int kExitError = 3;

enum class CheckMode { Exhaustive, Stochastic, FormulaOnly };
std::string to_string(CheckMode m);

struct TheoremCheck {
  std::string theorem_id;
  ParamMap params;
  FormulaValue formula_value;
  double computed_value = 0.0;
  /// Set when the computed quantity is an integer (edge counts).
  std::optional<long long> computed_exact;
  std::vector<std::string> witnesses_expected;
  std::vector<std::string> witnesses_found;
  Verdict verdict;
  CheckMode mode = CheckMode::FormulaOnly;
};

/// Inputs of run_check. `ns` lists every order to check; the forest comes
/// from `spec` or, for the k*P3 theorems, from `k`.
struct CheckParams {
  std::vector<int> ns;
  std::optional<LinearForestSpec> spec;
  std::optional<int> k;
  /// k range for rho-closed-forms.
  int k_min = 1;
  int k_max = 6;
  std::optional<GraphClass> graph_class;
  std::optional<Objective> objective;
  std::uint64_t seed = 0;
  int restarts = 50;
  long long budget = 100'000;
  bool revalidate = false;
  /// Witness cache directory; empty disables caching.
  std::filesystem::path cache_dir;
  int threads = 0;
};

/// The ten checkable claims.
const std::vector<std::string>& theorem_ids();

/// One TheoremCheck per order in params.ns. Orders within the enumeration cap
/// are checked exhaustively, larger ones by seeded hill climbing combined with
/// the verified extremal constructions. Outside a formula's proven range the
/// check still reports what it observes. Throws ParameterError for an unknown
/// id or missing parameters; cap errors from the engines become Unknown.
std::vector<TheoremCheck> run_check(const std::string& theorem_id, const CheckParams& params);

/// Decodes every found witness and reconfirms order, forest-freeness, class
/// and value. Returns the list of problems (empty when all is well).
std::vector<std::string> revalidate(const TheoremCheck& check);

/// Parses "7", "3..9" or "3,5,8".
std::vector<int> parse_order_range(const std::string& text);

// --- Comparison examples ---------------------------------------------------

struct Quantity {
  std::string name;
  double value = 0.0;
  std::optional<long long> exact;
};

struct ComparisonReport {
  std::string example_id;
  ParamMap params;
  std::vector<Quantity> lhs;
  std::vector<Quantity> rhs;
  std::vector<std::string> inequalities_expected;
  std::vector<std::string> inequalities_observed;
  Verdict verdict;
};

struct Section5Params {
  /// h for Examples 1/2, k for Examples 3/4 and prop5.
  int parameter = 2;
  int n = 100;
  std::uint64_t seed = 0;
  int samples = 200;
};

/// Builds the example's graphs and measures both inequalities. Example ids are
/// "1".."4" and "prop5". Throws ParameterError when the construction does not
/// fit in n vertices or the id is unknown.
ComparisonReport reproduce_section5(const std::string& example_id, const Section5Params& params);

/// Examples 1/3 construction (K_r v (K_1 u K_{l-r})) u (n-l-1)K_1 where l is
/// the largest integer with C(l,2) <= target and r = target - C(l,2).
Graph clique_padded_example(int n, long long target_edges);

// --- Witness cache ---------------------------------------------------------

/// Resolves the cache directory: the explicit path if nonempty, otherwise the
/// SPECTRAL_TURAN_CACHE environment variable, otherwise empty (disabled).
std::filesystem::path resolve_cache_dir(const std::filesystem::path& explicit_dir);

/// Loads a cached exhaustive report if the sidecar matches the key and this
/// tool version; nullopt otherwise.
std::optional<ExtremalReport> load_cached_report(const std::filesystem::path& dir, int n, const LinearForestSpec& spec,
                                                 Objective objective, GraphClass graph_class);
/// Writes <key>.g6 and <key>.json. Throws IoError.
void store_cached_report(const std::filesystem::path& dir, const ExtremalReport& report);

}  // namespace sturan
