#include "sturan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sturan/error.hpp"
#include "sturan/graph6.hpp"

namespace sturan {

namespace {

// Ordered partition: `order` lists vertices cell by cell, cell c occupying
// order[start[c] .. start[c+1]).
struct Partition {
  std::vector<int> order;
  std::vector<int> start;

  int cells() const { return static_cast<int>(start.size()) - 1; }
  int size(int c) const { return start[c + 1] - start[c]; }
  bool discrete() const { return cells() == static_cast<int>(order.size()); }
};

class Labeler {
 public:
  explicit Labeler(const Graph& g)
      : g_(g), n_(g.order()), words_(words_for(g.order())), tri_words_(words_for(std::max(1, n_ * (n_ - 1) / 2))) {}

  CanonicalLabeling run(std::span<const int> colors) {
    Partition root = initial_partition(colors);
    refine(root);
    CanonicalLabeling out;
    out.root_cell.assign(n_, 0);
    for (int c = 0; c < root.cells(); ++c)
      for (int i = root.start[c]; i < root.start[c + 1]; ++i) out.root_cell[root.order[i]] = c;
    search(root);

    out.position = best_position_;
    std::vector<int> perm(best_position_.begin(), best_position_.end());
    out.form = encode_graph6(relabel(g_, perm));
    out.automorphisms = std::move(automorphisms_);
    return out;
  }

 private:
  Partition initial_partition(std::span<const int> colors) {
    Partition p;
    p.order.resize(n_);
    std::iota(p.order.begin(), p.order.end(), 0);
    p.start.push_back(0);
    if (colors.empty()) {
      if (n_ > 0) p.start.push_back(n_);
      return p;
    }
    if (static_cast<int>(colors.size()) != n_) throw ParameterError("canonical_labeling: color vector size mismatch");
    std::stable_sort(p.order.begin(), p.order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    for (int i = 1; i < n_; ++i)
      if (colors[p.order[i]] != colors[p.order[i - 1]]) p.start.push_back(i);
    if (n_ > 0) p.start.push_back(n_);
    return p;
  }

  // Splits every cell by the vector of neighbour counts into all cells until
  // the partition is equitable. Splits depend only on the partition and the
  // graph, and new cells are ordered by count vector, so the result is
  // isomorphism-invariant.
  void refine(Partition& p) {
    std::vector<Word> masks;
    std::vector<int> keys;
    std::vector<int> idx;
    for (;;) {
      const int cells = p.cells();
      masks.assign(static_cast<std::size_t>(cells) * words_, 0);
      for (int c = 0; c < cells; ++c)
        for (int i = p.start[c]; i < p.start[c + 1]; ++i) {
          const int v = p.order[i];
          masks[static_cast<std::size_t>(c) * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
        }
      keys.assign(static_cast<std::size_t>(n_) * cells, 0);
      for (int v = 0; v < n_; ++v) {
        auto row = g_.row(v);
        for (int c = 0; c < cells; ++c) {
          int cnt = 0;
          for (int w = 0; w < words_; ++w) cnt += std::popcount(row[w] & masks[static_cast<std::size_t>(c) * words_ + w]);
          keys[static_cast<std::size_t>(v) * cells + c] = cnt;
        }
      }
      auto key_less = [&](int a, int b) {
        return std::lexicographical_compare(keys.begin() + static_cast<long>(a) * cells,
                                            keys.begin() + static_cast<long>(a + 1) * cells,
                                            keys.begin() + static_cast<long>(b) * cells,
                                            keys.begin() + static_cast<long>(b + 1) * cells);
      };
      auto key_equal = [&](int a, int b) {
        return std::equal(keys.begin() + static_cast<long>(a) * cells, keys.begin() + static_cast<long>(a + 1) * cells,
                          keys.begin() + static_cast<long>(b) * cells);
      };
      std::vector<int> new_start{0};
      bool changed = false;
      for (int c = 0; c < cells; ++c) {
        auto first = p.order.begin() + p.start[c], last = p.order.begin() + p.start[c + 1];
        if (last - first > 1) {
          std::sort(first, last, key_less);
          for (auto it = first + 1; it != last; ++it)
            if (!key_equal(*(it - 1), *it)) {
              new_start.push_back(static_cast<int>(it - p.order.begin()));
              changed = true;
            }
        }
        new_start.push_back(p.start[c + 1]);
      }
      p.start = std::move(new_start);
      if (!changed) return;
    }
  }

  Partition individualize(const Partition& p, int cell, int v) {
    Partition q = p;
    auto first = q.order.begin() + q.start[cell], last = q.order.begin() + q.start[cell + 1];
    auto it = std::find(first, last, v);
    std::rotate(first, it, it + 1);
    std::sort(first + 1, last);
    q.start.insert(q.start.begin() + cell + 1, q.start[cell] + 1);
    return q;
  }

  std::vector<Word> leaf_bits(const std::vector<int>& order) const {
    std::vector<Word> bits(static_cast<std::size_t>(tri_words_), 0);
    long long k = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (g_.adjacent(order[i], order[j])) bits[k / kWordBits] |= Word{1} << (kWordBits - 1 - k % kWordBits);
    return bits;
  }

  void record_automorphism(const std::vector<int>& ref_order, const std::vector<int>& order) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[order[i]] = ref_order[i];
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const Partition& p) {
    std::vector<Word> bits = leaf_bits(p.order);
    if (first_order_.empty()) {
      first_order_ = p.order;
      first_bits_ = bits;
      first_prefix_ = prefix_;
      best_order_ = p.order;
      best_bits_ = std::move(bits);
      best_prefix_ = prefix_;
    } else if (bits == first_bits_) {
      record_automorphism(first_order_, p.order);
      jump_to_ = common_depth(first_prefix_);
    } else if (bits == best_bits_) {
      record_automorphism(best_order_, p.order);
      jump_to_ = common_depth(best_prefix_);
    } else if (bits < best_bits_) {
      best_order_ = p.order;
      best_bits_ = std::move(bits);
      best_prefix_ = prefix_;
    }
    best_position_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) best_position_[best_order_[i]] = i;
  }

  // Depth of the deepest common ancestor of the current node and a stored leaf.
  int common_depth(const std::vector<int>& other) const {
    std::size_t d = 0;
    while (d < prefix_.size() && d < other.size() && prefix_[d] == other[d]) ++d;
    return static_cast<int>(d);
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // current prefix pointwise.
  std::vector<int> prefix_orbits() {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int v : prefix_)
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void search(const Partition& p) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    int target = 0;
    while (p.size(target) == 1) ++target;
    std::vector<int> members(p.order.begin() + p.start[target], p.order.begin() + p.start[target + 1]);
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    std::size_t seen_autos = automorphisms_.size();
    std::vector<int> orbit = prefix_orbits();
    for (int v : members) {
      if (automorphisms_.size() != seen_autos) {
        orbit = prefix_orbits();
        seen_autos = automorphisms_.size();
      }
      bool pruned = false;
      for (int u : explored)
        if (orbit[u] == orbit[v]) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      Partition child = individualize(p, target, v);
      refine(child);
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
      explored.push_back(v);
      // The subtree just left maps onto one explored earlier.
      if (jump_to_ >= 0) {
        if (static_cast<int>(prefix_.size()) > jump_to_) return;
        jump_to_ = -1;
      }
    }
  }

  const Graph& g_;
  int n_;
  int words_;
  int tri_words_;
  std::vector<int> prefix_;
  std::vector<int> first_prefix_, best_prefix_;
  int jump_to_ = -1;
  std::vector<int> first_order_, best_order_, best_position_;
  std::vector<Word> first_bits_, best_bits_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (g.order() > kCanonicalMaxOrder)
    throw SizeCapError("canonical labeling supports at most " + std::to_string(kCanonicalMaxOrder) +
                       " vertices (got " + std::to_string(g.order()) + ")");
  if (g.order() == 0) return CanonicalLabeling{{}, encode_graph6(g), {}, {}};
  return Labeler(g).run(colors);
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return decode_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  std::vector<int> cu(g.order(), 0), cv(g.order(), 0);
  cu[u] = -1;
  cv[v] = -1;
  return canonical_labeling(g, cu).form == canonical_labeling(g, cv).form;
}

}  // namespace sturan
