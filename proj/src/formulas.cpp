#include "sturan/formulas.hpp"

#include <cmath>
#include <set>

#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"

namespace sturan {

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

long double eval_poly(const std::vector<long long>& c, long double x) {
  long double acc = 0.0L;
  for (long long coeff : c) acc = acc * x + static_cast<long double>(coeff);
  return acc;
}

long double eval_derivative(const std::vector<long long>& c, long double x) {
  long double acc = 0.0L;
  const std::size_t deg = c.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) acc = acc * x + static_cast<long double>(c[i]) * static_cast<long double>(deg - i);
  return acc;
}

FormulaValue integer_value(long long v, Validity validity, std::string expr) {
  FormulaValue out;
  out.value = static_cast<double>(v);
  out.exact = v;
  out.validity = validity;
  out.expression = std::move(expr);
  return out;
}

// (a + sqrt(d)) / 2 with defining polynomial 4x^2 - 4ax + a^2 - d.
FormulaValue half_sum_sqrt(long long a, long long d, Validity validity) {
  if (d < 0) throw ParameterError("negative radicand " + std::to_string(d));
  FormulaValue out;
  const long double root = std::sqrt(static_cast<long double>(d));
  out.value = static_cast<double>((static_cast<long double>(a) + root) / 2.0L);
  out.polynomial = {4, -4 * a, a * a - d};
  out.validity = validity;
  out.expression = "(" + std::to_string(a) + "+sqrt(" + std::to_string(d) + "))/2";
  return out;
}

FormulaValue signed_sqrt(long long d, bool negative, Validity validity) {
  FormulaValue out;
  const double r = std::sqrt(static_cast<double>(d));
  out.value = negative ? -r : r;
  out.polynomial = {1, 0, -d};
  out.validity = validity;
  out.expression = std::string(negative ? "-" : "") + "sqrt(" + std::to_string(d) + ")";
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

std::string nk(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

}  // namespace

std::string Validity::to_string() const {
  switch (kind) {
    case Kind::Unconditional:
      return "Unconditional";
    case Kind::Proven:
      return "Proven(n>=" + std::to_string(min_n) + ")";
    case Kind::AsymptoticOnly:
      return "AsymptoticOnly";
  }
  return "?";
}

double FormulaValue::residual() const { return residual_at(value); }

double FormulaValue::residual_at(double x) const {
  if (polynomial.empty()) return 0.0;
  return static_cast<double>(std::fabs(eval_poly(polynomial, static_cast<long double>(x))));
}

long double largest_root_in(const std::vector<long long>& coeffs, long double lo, long double hi) {
  constexpr long double kResidual = 1e-12L;
  long double plo = eval_poly(coeffs, lo), phi = eval_poly(coeffs, hi);
  if (phi == 0.0L) return hi;
  if (plo > 0.0L || phi < 0.0L) throw ParameterError("largest_root_in: interval does not bracket a root");
  long double mid = (lo + hi) / 2.0L;
  for (int it = 0; it < 200; ++it) {
    mid = (lo + hi) / 2.0L;
    const long double pm = eval_poly(coeffs, mid);
    if (std::fabs(pm) <= kResidual * 1e-3L || hi - lo <= 0.0L) break;
    (pm < 0.0L ? lo : hi) = mid;
  }
  // Newton polish, kept inside the bracket.
  for (int it = 0; it < 4; ++it) {
    const long double d = eval_derivative(coeffs, mid);
    if (d == 0.0L) break;
    const long double next = mid - eval_poly(coeffs, mid) / d;
    if (next < lo || next > hi) break;
    mid = next;
  }
  return mid;
}

FormulaValue ex_linear_forest(int n, const LinearForestSpec& f) {
  if (f.k() < 2) throw ParameterError("ex_linear_forest needs k >= 2 paths (got " + f.to_string() + ")");
  if (f.all_three())
    throw PreconditionError("ex_linear_forest: k*P3 (" + f.to_string() + ") is covered by ex_kp3");
  const int h = f.h();
  require(n > h, "ex_linear_forest: requires n > h (n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")");
  const int c = f.all_odd() ? 1 : 0;
  const long long v = choose2(h) + static_cast<long long>(h) * (n - h) + c;
  return integer_value(v, Validity::asymptotic(),
                       "C(" + std::to_string(h) + ",2)+" + std::to_string(h) + "*(" + std::to_string(n) + "-" +
                           std::to_string(h) + ")+" + std::to_string(c));
}

FormulaValue ex_kp3(int n, int k) {
  require(k >= 1 && n >= 1, "ex_kp3: requires k >= 1 and n >= 1 " + nk(n, k));
  long long v;
  std::string expr;
  if (n < 3 * k) {
    v = choose2(n);
    expr = "C(n,2)";
  } else if (n < 5 * k - 1) {
    v = choose2(3 * k - 1) + (n - 3 * k + 1) / 2;
    expr = "C(3k-1,2)+floor((n-3k+1)/2)";
  } else if (n == 5 * k - 1) {
    v = choose2(3 * k - 1) + k;
    expr = "C(3k-1,2)+k";
  } else {
    v = edges_f_kernel(n, k);
    expr = "C(k-1,2)+(n-k+1)(k-1)+floor((n-k+1)/2)";
  }
  return integer_value(v, Validity::unconditional(), expr);
}

FormulaValue ex_bipartite_kp3(int n, int k) {
  require(k >= 2 && n >= k, "ex_bipartite_kp3: requires k >= 2 and n >= k " + nk(n, k));
  return integer_value(static_cast<long long>(k - 1) * (n - k + 1), Validity::proven_from(bipartite_kp3_threshold(k)),
                       "(k-1)(n-k+1)");
}

int h_parameter(const LinearForestSpec& f) { return f.h(); }

long long edges_split(int n, int h) { return choose2(h) + static_cast<long long>(h) * (n - h); }

long long edges_f_kernel(int n, int k) {
  const long long rest = n - k + 1;
  return choose2(k - 1) + rest * (k - 1) + rest / 2;
}

FormulaValue rho_s(int n, int h) {
  require(h >= 1 && n > h, "rho_s: requires h >= 1 and n > h (n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")");
  const long long hh = h;
  return half_sum_sqrt(hh - 1, 4 * hh * n - (3 * hh * hh + 2 * hh - 1), Validity::unconditional());
}

FormulaValue rho_s_plus_bound(int n, int h) {
  require(h >= 2, "rho_s_plus_bound: requires h >= 2 (got h=" + std::to_string(h) + ")");
  long long threshold = 1;
  for (int i = 0; i < h && threshold <= (1LL << 40); ++i) threshold *= 4;
  if (n < threshold)
    throw PreconditionError("rho_s_plus_bound: no guarantee below n = 4^h = " + std::to_string(threshold) +
                            " (got n=" + std::to_string(n) + ")");
  const long long hh = h;
  return half_sum_sqrt(hh - 1, 4 * hh * n - (3 * hh * hh + 2 * hh - 3), Validity::proven_from(threshold));
}

FormulaValue rho_s_plus(int n, int h) {
  require(h >= 1 && h <= n - 2,
          "rho_s_plus: requires 1 <= h <= n-2 (n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")");
  const long long hh = h, m = n - h - 2;
  FormulaValue out;
  out.polynomial = {1, -hh, -(hh + 1 + m * hh), m * hh};
  // S+ strictly contains the connected graph S_{n,h}, so rho lies in (rho_s, n-1].
  const long double lo = rho_s(n, h).value, hi = n - 1;
  out.value = static_cast<double>(largest_root_in(out.polynomial, lo, hi));
  out.validity = Validity::unconditional();
  out.expression = "largest root of x^3-" + std::to_string(hh) + "x^2-" + std::to_string(hh + 1 + m * hh) + "x+" +
                   std::to_string(m * hh);
  return out;
}

FormulaValue rho_f(int n, int k) {
  require(k >= 1 && k < n, "rho_f: requires 1 <= k < n " + nk(n, k));
  const long long kk = k;
  if ((n - k + 1) % 2 == 0) return half_sum_sqrt(kk - 1, 4 * (kk - 1) * n - (3 * kk * kk - 2 * kk - 5), Validity::unconditional());

  FormulaValue out;
  const long long linear = (kk - 1) * n - (kk * kk - kk - 1);
  out.polynomial = {1, -(kk - 1), -linear, kk - 1};
  out.validity = Validity::unconditional();
  out.expression = "largest root of x^3-" + std::to_string(kk - 1) + "x^2-" + std::to_string(linear) + "x+" +
                   std::to_string(kk - 1);
  if (k == 1) {
    // F_{n,1} = pK_2 u K_1 with p >= 1; the cubic is x^3 - x.
    out.value = 1.0;
    return out;
  }
  auto [lower, upper] = rho_f_bounds(n, k);
  out.value = static_cast<double>(largest_root_in(out.polynomial, lower.value, upper.value));
  return out;
}

std::pair<FormulaValue, FormulaValue> rho_f_bounds(int n, int k) {
  require(k >= 1 && k < n, "rho_f_bounds: requires 1 <= k < n " + nk(n, k));
  const long long kk = k;
  return {half_sum_sqrt(kk - 1, 4 * (kk - 1) * n - (3 * kk * kk - 2 * kk - 1), Validity::unconditional()),
          half_sum_sqrt(kk - 1, 4 * (kk - 1) * n - (3 * kk * kk - 2 * kk - 5), Validity::unconditional())};
}

FormulaValue rho_bipartite_kp3(int n, int k) {
  require(k >= 2 && n >= k, "rho_bipartite_kp3: requires k >= 2 and n >= k " + nk(n, k));
  return signed_sqrt(static_cast<long long>(k - 1) * (n - k + 1), false,
                     Validity::proven_from(bipartite_kp3_threshold(k)));
}

FormulaValue least_eigenvalue_bound(int n, int k) {
  require(k >= 2 && n >= k, "least_eigenvalue_bound: requires k >= 2 and n >= k " + nk(n, k));
  return signed_sqrt(static_cast<long long>(k - 1) * (n - k + 1), true,
                     Validity::proven_from(bipartite_kp3_threshold(k)));
}

FormulaValue spectral_extremal_value(int n, const LinearForestSpec& f) {
  if (f.k() < 2) throw PreconditionError("spectral extremal value needs k >= 2 paths (got " + f.to_string() + ")");
  if (f.all_three()) {
    FormulaValue v = rho_f(n, f.k());
    v.validity = Validity::proven_from(kp3_spectral_threshold(f.k()));
    return v;
  }
  FormulaValue v = f.all_odd() ? rho_s_plus(n, f.h()) : rho_s(n, f.h());
  v.validity = Validity::asymptotic();
  return v;
}

FormulaValue hong_bound(long long e, int n, int delta) {
  if (delta < 0 || delta > std::max(0, n - 1))
    throw ParameterError("hong_bound: delta must lie in [0, n-1] (delta=" + std::to_string(delta) +
                         ", n=" + std::to_string(n) + ")");
  const long long d = delta;
  const long long radicand = 8 * e - 4 * d * n + (d + 1) * (d + 1);
  if (radicand < 0)
    throw ParameterError("hong_bound: negative radicand " + std::to_string(radicand) +
                         " (inputs inconsistent with a graph)");
  return half_sum_sqrt(d - 1, radicand, Validity::unconditional());
}

long long kp3_spectral_threshold(int k) { return 8LL * k * k - 3LL * k; }
long long bipartite_kp3_threshold(int k) { return 11LL * k - 4; }

ExtremalFamily extremal_graphs(int n, const LinearForestSpec& f) {
  ExtremalFamily fam;
  auto add = [&](Graph g, std::string name) {
    fam.graphs.push_back(std::move(g));
    fam.names.push_back(std::move(name));
  };
  if (f.all_three()) {
    const int k = f.k();
    fam.edges = *ex_kp3(n, k).exact;
    fam.validity = Validity::unconditional();
    const std::string clique = "K_" + std::to_string(3 * k - 1);
    if (n < 3 * k) {
      add(complete_graph(n), "K_" + std::to_string(n));
    } else if (n < 5 * k - 1) {
      add(disjoint_union(complete_graph(3 * k - 1), near_perfect_matching(n - 3 * k + 1)),
          clique + " u F_{" + std::to_string(n - 3 * k + 1) + ",1}");
    } else if (n == 5 * k - 1) {
      add(disjoint_union(complete_graph(3 * k - 1), near_perfect_matching(2 * k)),
          clique + " u F_{" + std::to_string(2 * k) + ",1}");
      add(build_family(family::FKernel{n, k}), "F_{" + std::to_string(n) + "," + std::to_string(k) + "}");
    } else {
      add(build_family(family::FKernel{n, k}), "F_{" + std::to_string(n) + "," + std::to_string(k) + "}");
    }
  } else {
    if (f.k() < 2) throw PreconditionError("no extremal characterization for a single path " + f.to_string());
    const int h = f.h();
    fam.edges = *ex_linear_forest(n, f).exact;
    fam.validity = Validity::asymptotic();
    const std::string tag = "{" + std::to_string(n) + "," + std::to_string(h) + "}";
    if (f.all_odd()) {
      if (h > n - 2) throw PreconditionError("S+_{n,h} needs h <= n-2 (n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")");
      add(build_family(family::SplitSPlus{n, h}), "S+_" + tag);
    } else {
      add(build_family(family::SplitS{n, h}), "S_" + tag);
    }
  }

  // Degenerate parameters can make two named graphs coincide.
  std::set<std::string> seen;
  ExtremalFamily unique{{}, {}, fam.edges, fam.validity};
  for (std::size_t i = 0; i < fam.graphs.size(); ++i)
    if (seen.insert(canonical_form(fam.graphs[i])).second) {
      unique.graphs.push_back(fam.graphs[i]);
      unique.names.push_back(fam.names[i]);
    }
  return unique;
}

ExtremalFamily extremal_bipartite_graphs(int n, int k) {
  ExtremalFamily fam;
  fam.edges = *ex_bipartite_kp3(n, k).exact;
  fam.validity = Validity::proven_from(bipartite_kp3_threshold(k));
  if (k == 2) {
    for (int s = 0; s <= (n - 1) / 2; ++s) {
      fam.graphs.push_back(build_family(family::Broom{n, s}));
      fam.names.push_back("T_{" + std::to_string(n) + "," + std::to_string(s) + "}");
    }
  } else {
    fam.graphs.push_back(build_family(family::CompleteBipartite{k - 1, n - k + 1}));
    fam.names.push_back("K_{" + std::to_string(k - 1) + "," + std::to_string(n - k + 1) + "}");
  }
  return fam;
}

}  // namespace sturan
