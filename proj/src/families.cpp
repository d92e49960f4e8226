#include "sturan/families.hpp"

#include <numeric>
#include <vector>

#include "sturan/error.hpp"

namespace sturan {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void out_of_range(const std::string& family, const std::string& bound, const std::string& got) {
  throw ParameterError(family + ": requires " + bound + " (got " + got + ")");
}

std::string pair_str(const char* a, int x, const char* b, int y) {
  return std::string(a) + "=" + std::to_string(x) + ", " + b + "=" + std::to_string(y);
}

void require_order(const std::string& family, int n) {
  if (n < 0) out_of_range(family, "n >= 0", "n=" + std::to_string(n));
  if (n > kMaxOrder) throw SizeCapError(family + ": order " + std::to_string(n) + " exceeds cap");
}

Graph split(int n, int h, bool plus) {
  GraphBuilder b(n);
  for (int u = 0; u < h; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  if (plus) b.add_edge(h, h + 1);
  return b.build();
}

}  // namespace

Graph near_perfect_matching(int m) {
  require_order("NearPerfectMatching", m);
  GraphBuilder b(m);
  for (int i = 0; i + 1 < m; i += 2) b.add_edge(i, i + 1);
  return b.build();
}

Graph build_family(const FamilyDescriptor& desc) {
  Graph g = std::visit(
      overloaded{
          [](const family::Complete& d) {
            require_order("Complete", d.n);
            return complete_graph(d.n);
          },
          [](const family::EmptyGraph& d) {
            require_order("EmptyGraph", d.n);
            return empty_graph(d.n);
          },
          [](const family::Path& d) {
            require_order("Path", d.n);
            GraphBuilder b(d.n);
            for (int i = 0; i + 1 < d.n; ++i) b.add_edge(i, i + 1);
            return b.build();
          },
          [](const family::Star& d) {
            if (d.n < 1) out_of_range("Star", "n >= 1", "n=" + std::to_string(d.n));
            require_order("Star", d.n);
            GraphBuilder b(d.n);
            for (int v = 1; v < d.n; ++v) b.add_edge(0, v);
            return b.build();
          },
          [](const family::CompleteBipartite& d) {
            if (d.a < 0 || d.b < 0) out_of_range("CompleteBipartite", "a >= 0 and b >= 0", pair_str("a", d.a, "b", d.b));
            require_order("CompleteBipartite", d.a + d.b);
            GraphBuilder b(d.a + d.b);
            for (int u = 0; u < d.a; ++u)
              for (int v = 0; v < d.b; ++v) b.add_edge(u, d.a + v);
            return b.build();
          },
          [](const family::Broom& d) {
            if (d.n < 1) out_of_range("Broom", "n >= 1", "n=" + std::to_string(d.n));
            if (d.s < 0 || d.s > (d.n - 1) / 2)
              out_of_range("Broom", "0 <= s <= floor((n-1)/2)", pair_str("n", d.n, "s", d.s));
            require_order("Broom", d.n);
            GraphBuilder b(d.n);
            for (int i = 0; i < d.s; ++i) {
              b.add_edge(0, 2 * i + 1);
              b.add_edge(2 * i + 1, 2 * i + 2);
            }
            for (int v = 2 * d.s + 1; v < d.n; ++v) b.add_edge(0, v);
            return b.build();
          },
          [](const family::SplitS& d) {
            if (d.h <= 0 || d.h >= d.n) out_of_range("SplitS", "0 < h < n", pair_str("n", d.n, "h", d.h));
            require_order("SplitS", d.n);
            return split(d.n, d.h, false);
          },
          [](const family::SplitSPlus& d) {
            if (d.h <= 0 || d.h > d.n - 2) out_of_range("SplitSPlus", "0 < h <= n-2", pair_str("n", d.n, "h", d.h));
            require_order("SplitSPlus", d.n);
            return split(d.n, d.h, true);
          },
          [](const family::FKernel& d) {
            if (d.k < 1 || d.k >= d.n) out_of_range("FKernel", "1 <= k < n", pair_str("n", d.n, "k", d.k));
            require_order("FKernel", d.n);
            return join(complete_graph(d.k - 1), near_perfect_matching(d.n - d.k + 1));
          },
          [](const family::TuranGraph& d) {
            if (d.r < 1 || d.r > d.n) out_of_range("TuranGraph", "1 <= r <= n", pair_str("n", d.n, "r", d.r));
            require_order("TuranGraph", d.n);
            std::vector<int> part(d.n);
            const int base = d.n / d.r, extra = d.n % d.r;
            int v = 0;
            for (int p = 0; p < d.r; ++p)
              for (int i = 0; i < base + (p < extra ? 1 : 0); ++i) part[v++] = p;
            GraphBuilder b(d.n);
            for (int u = 0; u < d.n; ++u)
              for (int w = u + 1; w < d.n; ++w)
                if (part[u] != part[w]) b.add_edge(u, w);
            return b.build();
          },
      },
      desc);
  check_invariants(g);
  return g;
}

std::string describe(const FamilyDescriptor& desc) {
  return std::visit(
      overloaded{
          [](const family::Complete& d) { return "K_" + std::to_string(d.n); },
          [](const family::EmptyGraph& d) { return "Empty_" + std::to_string(d.n); },
          [](const family::Path& d) { return "P_" + std::to_string(d.n); },
          [](const family::Star& d) { return "K_{1," + std::to_string(d.n - 1) + "}"; },
          [](const family::CompleteBipartite& d) {
            return "K_{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
          },
          [](const family::Broom& d) { return "T_{" + std::to_string(d.n) + "," + std::to_string(d.s) + "}"; },
          [](const family::SplitS& d) { return "S_{" + std::to_string(d.n) + "," + std::to_string(d.h) + "}"; },
          [](const family::SplitSPlus& d) {
            return "S+_{" + std::to_string(d.n) + "," + std::to_string(d.h) + "}";
          },
          [](const family::FKernel& d) { return "F_{" + std::to_string(d.n) + "," + std::to_string(d.k) + "}"; },
          [](const family::TuranGraph& d) {
            return "T(" + std::to_string(d.n) + "," + std::to_string(d.r) + ")";
          },
      },
      desc);
}

Graph circulant(int n, int h) {
  if (h < 0 || n < 2 * h + 1)
    throw ParameterError("circulant: requires 0 <= h and n >= 2h+1 (got n=" + std::to_string(n) +
                         ", h=" + std::to_string(h) + ")");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v)
    for (int j = 1; j <= h; ++j) b.add_edge(v, (v + j) % n);
  return b.build();
}

Graph bipartite_circulant(int n, int d) {
  if (n % 2 != 0 || d < 0 || n / 2 < 2 * d)
    throw ParameterError("bipartite_circulant: requires even n and n/2 >= 2d (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  const int m = n / 2;
  GraphBuilder b(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2 * d; ++j) b.add_edge(i, m + (i + j) % m);
  return b.build();
}

}  // namespace sturan
