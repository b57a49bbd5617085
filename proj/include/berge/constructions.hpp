#ifndef BERGE_CONSTRUCTIONS_HPP
#define BERGE_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/tree.hpp"

namespace berge {

// n/(r+1) vertex-disjoint groups of size r+1; within each group the k-1
// lexicographically first r-subsets.  e = n(k-1)/(r+1).
// Requires (r+1) | n, k >= 2 and k-1 <= r+1 distinct subsets per group.
MultiHypergraph disjoint_cliques(int n, int r, int k);

// n/r disjoint r-sets, each repeated k-1 times.  e = n(k-1)/r.
// Requires r | n and k >= 2.
MultiHypergraph multi_blocks(int n, int r, int k);

// Two-sided hypergraph: t blocks of r-1 vertices, 2t singleton vertices,
// every hyperedge one block plus one singleton.  Biregular with block-vertex
// degree k-1 and singleton degree (k-1)/2, so n = t(r+1) and e = t(k-1).
// The name (k-1,(k-1)/2)-regular refers to (block-vertex, singleton)
// degrees: only that orientation gives edge density (k-1)/(r+1).
//
// adjacency, when given, lists the singleton indices (0..2t-1) of each
// block; the default is the biregular circulant where singleton j meets
// blocks floor(j/2)+i mod t for i < (k-1)/2 (complete bipartite when
// t = (k-1)/2).  Requires odd k >= 3, r >= k(k-2), and 2t >= k-1 so a
// simple biregular assignment exists.
MultiHypergraph two_sided(int t, int r, int k,
                          const std::optional<std::vector<std::vector<int>>>& adjacency = std::nullopt);

// Named trees, canonically labeled.  The balanced double star needs odd
// k >= 3: two adjacent centers with (k-1)/2 leaves each.
Tree make_tree(TreeKind kind, int k);

} // namespace berge

#endif
