#ifndef BERGE_HYPERGRAPH_HPP
#define BERGE_HYPERGRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "berge/vertex_set.hpp"

namespace berge {

class Tree;

// r-uniform multi-hypergraph.  Vertices are dense ids 0..n-1; every edge is
// a set of exactly r distinct vertices; a hyperedge with multiplicity m
// appears as m separate instances in the edge list.  Instances are what
// edge bijections are defined over, so repetition (not a count field) is
// the representation of multiplicity.
//
// Normal form: each edge sorted ascending, the edge list sorted
// lexicographically.  Equal hypergraphs serialize identically.  Immutable
// after construction; safe to share across threads.
class MultiHypergraph {
public:
    MultiHypergraph(int n, int r, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_.at(i); }
    const VertexSet& edge_set(int i) const { return sets_.at(i); }

    // true when no hyperedge instance repeats
    bool is_simple() const;

    // degree of every vertex, counted with multiplicity
    std::vector<int> degree_profile() const;

    // instance indices containing each vertex, ascending
    std::vector<std::vector<int>> vertex_incidence() const;

    // groups of edge instance indices whose vertex sets are connected by
    // overlap; each group ascending, groups ordered by smallest member
    std::vector<std::vector<int>> edge_components() const;

    std::string serialize() const;
    static MultiHypergraph parse(std::istream& in);
    static MultiHypergraph parse(const std::string& text);

    struct WithEdge;
    WithEdge with_edge(const std::vector<int>& edge) const;

    struct Induced;
    // keeps the given vertices; edges touching a removed vertex are dropped
    Induced induced(const std::vector<int>& keep_vertices) const;

    friend bool operator==(const MultiHypergraph& a, const MultiHypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<VertexSet> sets_;
};

struct MultiHypergraph::WithEdge {
    MultiHypergraph hypergraph;
    std::vector<int> old_to_new;  // instance index remap
    int new_edge_index;
};

struct MultiHypergraph::Induced {
    MultiHypergraph hypergraph;    // on the kept vertices, ids compacted
    std::vector<int> vertex_orig;  // new id -> original id
    std::vector<int> edge_orig;    // new instance -> original instance
};

// Witness that a hypergraph contains a Berge copy of a tree: an injective
// placement of the tree vertices plus a bijection from tree edges onto
// pairwise distinct hyperedge instances covering the placed endpoints.
struct BergeEmbedding {
    std::vector<int> vertex_map;  // tree vertex -> hypergraph vertex
    std::vector<int> edge_map;    // tree edge index -> hyperedge instance index
};

// true iff the maps are injective / instance-distinct and every tree edge's
// endpoints land inside its assigned hyperedge.  Ids outside the host or
// tree ranges are reported as std::out_of_range, distinct from a logical
// failure.
bool verify_embedding(const MultiHypergraph& h, const Tree& t, const BergeEmbedding& emb);

std::string serialize_embedding(const BergeEmbedding& emb);

} // namespace berge

#endif
