#ifndef BERGE_TEST_ORACLES_HPP
#define BERGE_TEST_ORACLES_HPP

#include <random>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/tree.hpp"

// Independent reference implementations used to freeze expected values.
// They share no code with the search paths they check: plain enumeration
// over injections and instance assignments, permutation-based isomorphism,
// and a separate canonical encoding for the tree census.
namespace berge::oracle {

// Complete containment check by enumerating every injective placement of
// the tree vertices and then every assignment of tree edges to distinct
// instances, in index order with no pruning beyond containment itself.
bool contains_berge_copy(const MultiHypergraph& h, const Tree& t);

// Number of k-edge tree isomorphism classes, from the labeled-tree sequence
// space, deduplicated by an all-roots subtree encoding (not the centroid
// form the library uses).
long long tree_census(int k);

// Seeded random multi-hypergraph: picks `edges` times an r-subset of [n],
// repetition allowed.
MultiHypergraph random_hypergraph(int n, int r, int edges, std::mt19937& rng);

// Seeded G(n, p) with at least one edge (re-drawn when empty).
Graph random_graph(int n, double p, std::mt19937& rng);

}  // namespace berge::oracle

#endif
