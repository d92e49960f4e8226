#pragma once

#include <string>
#include <variant>

#include "sturan/graph.hpp"

namespace sturan {

namespace family {

struct Complete { int n; };
struct EmptyGraph { int n; };
struct Path { int n; };
/// K_{1,n-1}; centre is vertex 0.
struct Star { int n; };
struct CompleteBipartite { int a; int b; };
/// T_{n,s}: s pendant P_3's and n-2s-1 pendant edges sharing one end vertex.
struct Broom { int n; int s; };
/// S_{n,h} = K_h joined to n-h independent vertices.
struct SplitS { int n; int h; };
/// S_{n,h} with one extra edge inside the independent side.
struct SplitSPlus { int n; int h; };
/// F_{n,k} = K_{k-1} joined to a near-perfect matching on n-k+1 vertices.
struct FKernel { int n; int k; };
struct TuranGraph { int n; int r; };

}  // namespace family

using FamilyDescriptor =
    std::variant<family::Complete, family::EmptyGraph, family::Path, family::Star,
                 family::CompleteBipartite, family::Broom, family::SplitS, family::SplitSPlus,
                 family::FKernel, family::TuranGraph>;

/// Builds the described graph.
///
/// Labeling is fixed: clique / dominating vertices take the lowest indices.
///   - SplitS / SplitSPlus: clique 0..h-1, independent side h..n-1; the extra
///     edge of SplitSPlus is {h, h+1}.
///   - FKernel: clique 0..k-2, then matched pairs (k-1+2i, k+2i), then the
///     unmatched vertex if n-k+1 is odd.
///   - Broom: centre 0; the i-th P_3 is 0-(2i+1)-(2i+2); leaves follow.
///   - CompleteBipartite: side of size a first.
///   - TuranGraph: larger parts first, consecutive labels.
///
/// Throws ParameterError naming the violated bound.
Graph build_family(const FamilyDescriptor& desc);

std::string describe(const FamilyDescriptor& desc);

/// Circulant graph on n vertices with connection set {+-1, ..., +-h}; 2h-regular
/// for n >= 2h+1.
Graph circulant(int n, int h);

/// 2d-regular bipartite circulant on n = 2m vertices: a_i ~ b_{i+j mod m} for
/// j = 0..2d-1. Requires n even and m >= 2d.
Graph bipartite_circulant(int n, int d);

/// Perfect matching plus an isolated vertex when m is odd (F_{m,1}, defined
/// for m >= 1).
Graph near_perfect_matching(int m);

}  // namespace sturan
