#ifndef BERGE_BERGE_SEARCH_HPP
#define BERGE_BERGE_SEARCH_HPP

#include <optional>

#include "berge/hypergraph.hpp"
#include "berge/tree.hpp"

namespace berge {

// Exact decision procedure: returns a verified witness iff the hypergraph
// contains a Berge copy of the tree; std::nullopt means no embedding exists.
//
// The tree is embedded along a connected vertex order; at each step the
// hyperedge for the next tree edge and the image of the new tree vertex are
// chosen together, candidates filtered by membership of the already placed
// endpoint.  Before descending, a bipartite matching between unassigned
// tree edges and unused hyperedge instances must still be perfect, or the
// branch is pruned.  Candidates are explored in ascending (instance index,
// vertex id) order, so witnesses are reproducible.
std::optional<BergeEmbedding> find_berge_copy(const MultiHypergraph& h, const Tree& t);

} // namespace berge

#endif
