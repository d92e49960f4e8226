#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sturan/forest.hpp"
#include "sturan/graph.hpp"

namespace sturan {

/// Range of n for which a value is a theorem rather than an asymptotic claim.
struct Validity {
  enum class Kind { Unconditional, Proven, AsymptoticOnly };
  Kind kind = Kind::Unconditional;
  /// For Proven: the statement holds for every n >= min_n.
  long long min_n = 0;

  static Validity unconditional() { return {Kind::Unconditional, 0}; }
  static Validity proven_from(long long n) { return {Kind::Proven, n}; }
  static Validity asymptotic() { return {Kind::AsymptoticOnly, 0}; }

  /// True if the statement is established (not merely asymptotic) at order n.
  bool proven_at(long long n) const {
    return kind == Kind::Unconditional || (kind == Kind::Proven && n >= min_n);
  }
  std::string to_string() const;

  friend bool operator==(const Validity&, const Validity&) = default;
};

/// A closed-form quantity. Integer formulas fill `exact`; algebraic values
/// carry their defining integer polynomial (highest degree first) so callers
/// can check |p(value)| instead of comparing floats to floats.
struct FormulaValue {
  double value = 0.0;
  std::optional<long long> exact;
  std::vector<long long> polynomial;
  Validity validity;
  std::string expression;

  /// |p(value)| evaluated in extended precision; 0 when there is no polynomial.
  double residual() const;
  /// Residual at an arbitrary point, for checking eigensolver output.
  double residual_at(double x) const;
};

// --- Turán numbers --------------------------------------------------------

/// C(h,2) + h(n-h) + c with h = sum floor(a_i/2) - 1 and c = 1 iff every a_i
/// is odd. Requires k >= 2 and some a_i != 3 (k*P3 goes to ex_kp3).
FormulaValue ex_linear_forest(int n, const LinearForestSpec& f);

/// Four-case Turán number for k*P3. Unconditional.
FormulaValue ex_kp3(int n, int k);

/// (k-1)(n-k+1), proven for n >= 11k-4.
FormulaValue ex_bipartite_kp3(int n, int k);

int h_parameter(const LinearForestSpec& f);

/// Edge counts of the extremal families.
long long edges_split(int n, int h);
long long edges_f_kernel(int n, int k);

// --- Spectral radii -------------------------------------------------------

/// rho(S_{n,h}) = (h-1 + sqrt(4hn - (3h^2+2h-1)))/2 for h >= 1, n > h.
FormulaValue rho_s(int n, int h);

/// Strict upper bound on rho(S+_{n,h}); only guaranteed for h >= 2, n >= 4^h
/// (PreconditionError otherwise). For h = 2 the eigensolver shows the
/// inequality failing at 16 <= n <= 37; it holds from n = 38.
FormulaValue rho_s_plus_bound(int n, int h);

/// rho(S+_{n,h}) as the largest root of the equitable-quotient cubic
/// x^3 - h x^2 - (h+1+mh) x + mh with m = n-h-2.
FormulaValue rho_s_plus(int n, int h);

/// rho(F_{n,k}): closed form when n-k+1 is even, otherwise the largest root of
/// x^3 - (k-1)x^2 - [(k-1)n - (k^2-k-1)]x + (k-1).
FormulaValue rho_f(int n, int k);

/// (lower, upper) with lower < rho_f(n,k) <= upper.
std::pair<FormulaValue, FormulaValue> rho_f_bounds(int n, int k);

/// sqrt((k-1)(n-k+1)): the bipartite k*P3 spectral bound, proven for n >= 11k-4.
FormulaValue rho_bipartite_kp3(int n, int k);

/// -sqrt((k-1)(n-k+1)): least-eigenvalue bound over k*P3-free graphs.
FormulaValue least_eigenvalue_bound(int n, int k);

/// Maximum spectral radius over F-free graphs for the three linear-forest
/// cases (even part -> S_{n,h}; all odd, some > 3 -> S+_{n,h}; k*P3 -> F_{n,k}).
FormulaValue spectral_extremal_value(int n, const LinearForestSpec& f);

/// (delta - 1 + sqrt(8e - 4 delta n + (delta+1)^2)) / 2.
///
/// For fixed (e, n) with 2e <= n(n-1) this is non-increasing in delta.
/// Throws ParameterError on a negative radicand or delta outside [0, n-1].
FormulaValue hong_bound(long long e, int n, int delta);

/// Orders n >= this satisfy the explicit threshold of the k*P3 spectral
/// result (8k^2 - 3k).
long long kp3_spectral_threshold(int k);
long long bipartite_kp3_threshold(int k);

// --- Extremal graphs ------------------------------------------------------

struct ExtremalFamily {
  std::vector<Graph> graphs;
  std::vector<std::string> names;
  long long edges = 0;
  Validity validity;
};

/// Every extremal graph the relevant theorem names, pairwise non-isomorphic.
/// k*P3 uses the four-case characterization; other forests with k >= 2 use
/// S_{n,h} or S+_{n,h}. Anything else throws PreconditionError.
ExtremalFamily extremal_graphs(int n, const LinearForestSpec& f);

/// Bipartite k*P3 extremal graphs: all brooms T_{n,s} for k = 2,
/// K_{k-1,n-k+1} for k >= 3.
ExtremalFamily extremal_bipartite_graphs(int n, int k);

/// Largest root of an integer polynomial inside [lo, hi], assuming p(lo) <= 0
/// <= p(hi) and a single sign change there. Bisection to a residual of 1e-12
/// (at most 200 halvings) followed by a Newton polish.
long double largest_root_in(const std::vector<long long>& coeffs, long double lo, long double hi);

}  // namespace sturan
