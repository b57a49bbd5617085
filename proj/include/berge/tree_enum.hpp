#ifndef BERGE_TREE_ENUM_HPP
#define BERGE_TREE_ENUM_HPP

#include <vector>

#include "berge/tree.hpp"

namespace berge {

// One canonically labeled representative per isomorphism class of k-edge
// trees, ordered by canonical code.  Supported for 1 <= k <= 10.
//
// Up to k = 8 the catalog is produced by decoding every labeled tree from
// its sequence encoding and deduplicating by canonical code; the labeled
// count (k+1)^(k-1) stops being reasonable after that, so k = 9, 10 switch
// to rooted level-sequence backtracking.
std::vector<Tree> enumerate_trees(int k);

// Decode a labeled tree on k+1 vertices from its length-(k-1) sequence over
// {0..k}.  Exposed for the census cross-checks.
Tree tree_from_pruefer(const std::vector<int>& seq);

} // namespace berge

#endif
