#ifndef BERGE_TREE_HPP
#define BERGE_TREE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace berge {

// The forbidden pattern: a tree with k edges on vertex ids 0..k.
// Immutable after construction.
class Tree {
public:
    Tree(int k, std::vector<std::pair<int, int>> edges);

    int edge_count() const { return k_; }
    int vertex_count() const { return k_ + 1; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool is_leaf(int v) const { return degree(v) == 1; }
    int max_degree() const;

    // AHU encoding rooted at the centroid(s), lexicographically minimal.
    // Equal strings <=> isomorphic trees.
    const std::string& canonical_code() const { return code_; }
    // Same shape, vertices renumbered into the canonical order.
    Tree canonical_relabel() const;

    std::string serialize() const;  // "k" line, then one "u v" line per edge
    static Tree parse(std::istream& in);
    static Tree parse(const std::string& text);

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    int k_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::string code_;
};

enum class TreeKind { Star, Path, BalancedDoubleStar, Other };

struct TreeClass {
    TreeKind kind;
    int k;
};

const char* tree_kind_name(TreeKind kind);

// star: some vertex meets every edge; path: maximum degree <= 2 (checked
// after star, so the 1- and 2-edge trees classify as stars); balanced double
// star: two adjacent centers each carrying (k-1)/2 leaves, odd k (for k=3
// that shape is already a path).
TreeClass classify_tree(const Tree& t);

// A non-star tree always has an internal vertex whose neighbors are all
// leaves except exactly one, of degree at most floor((k+1)/2).  Returns the
// smallest-id such vertex with its degree.  Error on stars (vacuous).
std::pair<int, int> low_degree_internal_vertex(const Tree& t);

// Vertex order x_0..x_k such that every prefix induces a connected subtree,
// x_0 is a leaf and (x_0,x_1,x_2,x_3) is a path; each x_i (i>=1) attaches to
// exactly one earlier vertex through its parent edge.
struct PrefixOrder {
    std::vector<int> order;       // positions -> tree vertex ids
    std::vector<int> parent_pos;  // position i>=1 -> position of its attachment
    std::vector<int> edge_index;  // position i>=1 -> index into Tree::edges()
};

PrefixOrder prefix_order(const Tree& t);  // error on stars

} // namespace berge

#endif
