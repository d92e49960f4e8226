#pragma once

#include <span>
#include <string>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// Orders above this are rejected by the canonical labeler.
inline constexpr int kCanonicalMaxOrder = 256;

struct CanonicalLabeling {
  /// position[v] is v's index in the canonical ordering.
  std::vector<int> position;
  /// graph6 encoding of the canonically relabeled graph.
  std::string form;
  /// Automorphisms discovered during the search (as vertex maps). They are not
  /// guaranteed to generate the full group.
  std::vector<std::vector<int>> automorphisms;
  /// Cell index of each vertex in the root equitable partition. Vertices in
  /// different root cells are never in the same automorphism orbit.
  std::vector<int> root_cell;
};

/// Canonical labeling by equitable-partition refinement and individualization,
/// pruned with discovered automorphisms.
///
/// The form is the lexicographically smallest column-major upper-triangle bit
/// string over the leaves of the refinement tree, written as graph6; two graphs
/// get the same form iff they are isomorphic. `colors` (optional, one value per
/// vertex) restricts to color-preserving isomorphisms; cells are ordered by
/// increasing color value.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, int u, int v);

}  // namespace sturan
