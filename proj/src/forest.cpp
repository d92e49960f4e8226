#include "sturan/forest.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sturan/error.hpp"

namespace sturan {

LinearForestSpec::LinearForestSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParameterError("linear forest needs at least one path");
  for (int a : parts_)
    if (a < 2) throw ParameterError("linear forest path orders must be >= 2 (got " + std::to_string(a) + ")");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

LinearForestSpec LinearForestSpec::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw ParameterError("empty entry in linear forest spec '" + std::string(text) + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      throw ParameterError("bad path order '" + token + "' in spec '" + std::string(text) + "'");
    parts.push_back(value);
  }
  return LinearForestSpec(std::move(parts));
}

LinearForestSpec LinearForestSpec::k_p3(int k) {
  if (k < 1) throw ParameterError("k*P3 requires k >= 1 (got " + std::to_string(k) + ")");
  return LinearForestSpec(std::vector<int>(k, 3));
}

int LinearForestSpec::total_order() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int LinearForestSpec::h() const noexcept {
  int sum = 0;
  for (int a : parts_) sum += a / 2;
  return sum - 1;
}

bool LinearForestSpec::all_odd() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int a) { return a % 2 == 1; });
}

bool LinearForestSpec::all_three() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int a) { return a == 3; });
}

std::string LinearForestSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

// Depth-first placement of paths, longest first. Each path is grown from its
// smaller endpoint, and equal-order paths have strictly increasing start
// vertices, so every embedding is found in exactly one orientation/order.
template <class G>
class ForestSearch {
 public:
  ForestSearch(const G& g, std::vector<int> parts, unsigned long long budget)
      : g_(g),
        n_(g.order()),
        words_(words_for(g.order())),
        parts_(std::move(parts)),
        used_(static_cast<std::size_t>(words_), 0),
        paths_(parts_.size()),
        starts_(parts_.size(), -1),
        suffix_need_(parts_.size() + 1, 0),
        budget_(budget) {
    for (int i = static_cast<int>(parts_.size()) - 1; i >= 0; --i) suffix_need_[i] = suffix_need_[i + 1] + parts_[i];
    build_separators();
  }

  bool run() {
    if (suffix_need_[0] > n_) return false;
    return place(0);
  }

  bool run_through_edge(int u, int v) {
    std::vector<int> all = parts_;
    std::vector<int> lengths = all;
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int a : lengths) {
      std::vector<int> rest = all;
      rest.erase(std::find(rest.begin(), rest.end(), a));
      reset_parts(rest);
      mark(u);
      mark(v);
      for (int left = 0; left <= a - 2; ++left) {
        std::vector<int> lchain, rchain;
        if (grow(u, v, lchain, rchain, left, a - 2 - left)) {
          std::vector<int> path(lchain.rbegin(), lchain.rend());
          path.push_back(u);
          path.push_back(v);
          path.insert(path.end(), rchain.begin(), rchain.end());
          fixed_path_ = std::move(path);
          return true;
        }
      }
      unmark(u);
      unmark(v);
    }
    return false;
  }

  ForestEmbedding embedding() const {
    std::vector<std::vector<int>> all = paths_;
    if (!fixed_path_.empty()) all.push_back(fixed_path_);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return ForestEmbedding{std::move(all)};
  }

 private:
  bool is_used(int v) const { return (used_[v / kWordBits] >> (v % kWordBits)) & 1U; }
  void mark(int v) { used_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void unmark(int v) { used_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  void reset_parts(std::vector<int> parts) {
    parts_ = std::move(parts);
    paths_.assign(parts_.size(), {});
    starts_.assign(parts_.size(), -1);
    suffix_need_.assign(parts_.size() + 1, 0);
    for (int i = static_cast<int>(parts_.size()) - 1; i >= 0; --i) suffix_need_[i] = suffix_need_[i + 1] + parts_[i];
  }

  void tick() {
    if (++nodes_ > budget_) throw SearchBudgetExceeded(budget_);
  }

  bool has_free_neighbor(int v) const {
    auto row = g_.row(v);
    for (int w = 0; w < words_; ++w)
      if (row[w] & ~used_[w]) return true;
    return false;
  }

  template <class Fn>
  bool for_free_neighbors(int v, Fn&& fn) const {
    auto row = g_.row(v);
    for (int w = 0; w < words_; ++w) {
      Word bits = row[w] & ~used_[w];
      while (bits) {
        const int x = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        if (fn(x)) return true;
      }
    }
    return false;
  }

  bool place(std::size_t i) {
    if (i == parts_.size()) return true;
    if (!feasible(i)) return false;

    const int lo = (i > 0 && parts_[i] == parts_[i - 1]) ? starts_[i - 1] + 1 : 0;
    for (int s = lo; s < n_; ++s) {
      if (is_used(s) || !has_free_neighbor(s)) continue;
      mark(s);
      paths_[i].assign(1, s);
      if (extend(i)) return true;
      paths_[i].clear();
      unmark(s);
    }
    return false;
  }

  bool extend(std::size_t i) {
    tick();
    auto& path = paths_[i];
    const int a = parts_[i];
    if (static_cast<int>(path.size()) == a) {
      starts_[i] = path.front();
      return place(i + 1);
    }
    const bool closing = static_cast<int>(path.size()) + 1 == a;
    return for_free_neighbors(path.back(), [&](int x) {
      if (closing && x < path.front()) return false;
      mark(x);
      path.push_back(x);
      if (extend(i)) return true;
      path.pop_back();
      unmark(x);
      return false;
    });
  }

  // Candidate separators: the vertices of degree >= d, for each degree value d
  // that leaves fewer vertices than the forest needs.
  void build_separators() {
    std::vector<int> deg(n_);
    for (int v = 0; v < n_; ++v) {
      auto row = g_.row(v);
      for (int w = 0; w < words_; ++w) deg[v] += std::popcount(row[w]);
    }
    std::vector<int> values(deg.begin(), deg.end());
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const int total = suffix_need_.empty() ? 0 : suffix_need_[0];
    for (int d : values) {
      if (d == 0 || separators_.size() >= kMaxSeparators) break;
      std::vector<Word> mask(static_cast<std::size_t>(words_), 0);
      int count = 0;
      for (int v = 0; v < n_; ++v)
        if (deg[v] >= d) {
          mask[v / kWordBits] |= Word{1} << (v % kWordBits);
          ++count;
        }
      if (count >= total || count == n_) break;
      separators_.push_back(std::move(mask));
    }
  }

  // Sizes of the connected components induced by `allowed`, largest first.
  std::vector<int> component_sizes(std::vector<Word> allowed) const {
    std::vector<int> sizes;
    std::vector<Word> frontier(static_cast<std::size_t>(words_)), next(static_cast<std::size_t>(words_));
    for (int w0 = 0; w0 < words_; ++w0) {
      while (allowed[w0]) {
        const int root = w0 * kWordBits + std::countr_zero(allowed[w0]);
        std::fill(frontier.begin(), frontier.end(), 0);
        frontier[root / kWordBits] = Word{1} << (root % kWordBits);
        allowed[root / kWordBits] &= ~frontier[root / kWordBits];
        int size = 1;
        for (bool grew = true; grew;) {
          std::fill(next.begin(), next.end(), 0);
          for (int w = 0; w < words_; ++w)
            for (Word bits = frontier[w]; bits; bits &= bits - 1) {
              auto row = g_.row(w * kWordBits + std::countr_zero(bits));
              for (int x = 0; x < words_; ++x) next[x] |= row[x];
            }
          grew = false;
          for (int w = 0; w < words_; ++w) {
            next[w] &= allowed[w];
            allowed[w] &= ~next[w];
            size += std::popcount(next[w]);
            grew = grew || next[w];
          }
          frontier.swap(next);
        }
        sizes.push_back(size);
      }
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
  }

  // Necessary conditions for placing parts_[i..]: every path lies inside one
  // component of the unused graph, and for each separator C a path of order a
  // with t vertices in C splits into at most t+1 segments outside C.
  bool feasible(std::size_t i) const {
    const int need = suffix_need_[i];
    const int paths = static_cast<int>(parts_.size() - i);
    std::vector<Word> free_mask(static_cast<std::size_t>(words_));
    for (int w = 0; w < words_; ++w) free_mask[w] = ~used_[w];
    if (n_ % kWordBits) free_mask[words_ - 1] &= (Word{1} << (n_ % kWordBits)) - 1;

    const auto sizes = component_sizes(free_mask);
    if (sizes.empty() || sizes.front() < parts_[i]) return false;
    int usable = 0;
    for (int c : sizes)
      if (c >= parts_.back()) usable += c;
    if (usable < need) return false;

    for (const auto& sep : separators_) {
      std::vector<Word> outside(static_cast<std::size_t>(words_));
      int in_sep = 0;
      for (int w = 0; w < words_; ++w) {
        outside[w] = free_mask[w] & ~sep[w];
        in_sep += std::popcount(free_mask[w] & sep[w]);
      }
      const auto parts_out = component_sizes(std::move(outside));
      const int longest = parts_out.empty() ? 0 : parts_out.front();
      int must_use = 0;
      for (std::size_t j = i; j < parts_.size(); ++j) must_use += parts_[j] / (longest + 1);
      if (must_use > in_sep) return false;
      int covered = 0;
      const std::size_t segments = static_cast<std::size_t>(in_sep + paths);
      for (std::size_t j = 0; j < parts_out.size() && j < segments; ++j) covered += parts_out[j];
      if (need > in_sep + covered) return false;
    }
    return true;
  }

  bool grow(int u, int v, std::vector<int>& lchain, std::vector<int>& rchain, int need_left, int need_right) {
    tick();
    if (need_left > 0) {
      const int tip = lchain.empty() ? u : lchain.back();
      return for_free_neighbors(tip, [&](int x) {
        mark(x);
        lchain.push_back(x);
        if (grow(u, v, lchain, rchain, need_left - 1, need_right)) return true;
        lchain.pop_back();
        unmark(x);
        return false;
      });
    }
    if (need_right > 0) {
      const int tip = rchain.empty() ? v : rchain.back();
      return for_free_neighbors(tip, [&](int x) {
        mark(x);
        rchain.push_back(x);
        if (grow(u, v, lchain, rchain, need_left, need_right - 1)) return true;
        rchain.pop_back();
        unmark(x);
        return false;
      });
    }
    if (suffix_need_[0] > n_ - static_cast<int>(lchain.size() + rchain.size()) - 2) return false;
    return place(0);
  }

  const G& g_;
  int n_;
  int words_;
  std::vector<int> parts_;
  std::vector<Word> used_;
  std::vector<std::vector<int>> paths_;
  std::vector<int> starts_;
  std::vector<int> suffix_need_;
  std::vector<int> fixed_path_;
  static constexpr std::size_t kMaxSeparators = 8;
  std::vector<std::vector<Word>> separators_;
  unsigned long long nodes_ = 0;
  unsigned long long budget_;
};

bool edge_present(const Graph& g, int u, int v) { return g.adjacent(u, v); }
bool edge_present(const GraphBuilder& g, int u, int v) { return g.has_edge(u, v); }

template <class G>
void check_edge(const G& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw ParameterError("through-edge search needs two distinct vertices of the graph");
  if (!edge_present(g, u, v)) throw ParameterError("through-edge search: uv is not an edge");
}

}  // namespace

bool contains_linear_forest(const Graph& g, const LinearForestSpec& f, ForestSearchOptions opts) {
  ForestSearch<Graph> search(g, f.parts(), opts.node_budget);
  return search.run();
}

bool contains_linear_forest(const GraphBuilder& g, const LinearForestSpec& f, ForestSearchOptions opts) {
  ForestSearch<GraphBuilder> search(g, f.parts(), opts.node_budget);
  return search.run();
}

std::optional<ForestEmbedding> embed_linear_forest(const Graph& g, const LinearForestSpec& f,
                                                   ForestSearchOptions opts) {
  ForestSearch<Graph> search(g, f.parts(), opts.node_budget);
  if (!search.run()) return std::nullopt;
  return search.embedding();
}

std::optional<ForestEmbedding> embed_linear_forest_through_edge(const Graph& g, const LinearForestSpec& f, int u,
                                                                int v, ForestSearchOptions opts) {
  check_edge(g, u, v);
  ForestSearch<Graph> search(g, f.parts(), opts.node_budget);
  if (!search.run_through_edge(u, v)) return std::nullopt;
  return search.embedding();
}

bool contains_linear_forest_through_edge(const GraphBuilder& g, const LinearForestSpec& f, int u, int v,
                                         ForestSearchOptions opts) {
  check_edge(g, u, v);
  ForestSearch<GraphBuilder> search(g, f.parts(), opts.node_budget);
  return search.run_through_edge(u, v);
}

bool validate_embedding(const Graph& g, const LinearForestSpec& f, const ForestEmbedding& e) {
  if (static_cast<int>(e.paths.size()) != f.k()) return false;
  std::vector<int> lengths;
  std::vector<char> seen(g.order(), 0);
  for (const auto& path : e.paths) {
    lengths.push_back(static_cast<int>(path.size()));
    for (std::size_t i = 0; i < path.size(); ++i) {
      const int v = path[i];
      if (v < 0 || v >= g.order() || seen[v]) return false;
      seen[v] = 1;
      if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
    }
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths == f.parts();
}

}  // namespace sturan
