#ifndef BERGE_GRAPH_HPP
#define BERGE_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "berge/rational.hpp"

namespace berge {

class MultiHypergraph;

// Plain undirected simple graph.  Used for incidence bipartite graphs and
// for the average-degree / peeling machinery, which is stated for arbitrary
// graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    void add_edge(int u, int v);
    void finalize();  // sorts adjacency; call once after the last add_edge

    // d(G) = 2e/v, exact; 0 for the empty vertex set
    Rational average_degree() const;

    std::vector<std::pair<int, int>> edge_list() const;

    struct Induced;
    Induced induced(const std::vector<int>& keep) const;

private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

struct Graph::Induced {
    Graph graph;
    std::vector<int> orig_ids;  // new id -> id in the host graph
};

// Vertex-hyperedge incidence bipartite graph: left ids [0,n) are hypergraph
// vertices, right ids [n, n+e) are hyperedge instances.
struct IncidenceGraph {
    int left = 0;   // hypergraph vertices
    int right = 0;  // hyperedge instances
    Graph graph;

    int edge_vertex(int instance) const { return left + instance; }
    bool is_edge_vertex(int id) const { return id >= left; }
    Rational average_degree() const { return graph.average_degree(); }
};

IncidenceGraph incidence_graph(const MultiHypergraph& h);

// true iff the vertices of `subset` are incident with at most
// d(G)/2 * |subset| edges (exact rational compare).  When true, the average
// degree of G minus the subset is verified to be >= d(G) before returning.
// subset must be a proper subset of V(G).
bool check_average_deletion(const Graph& g, const std::vector<int>& subset);

// Iteratively peels vertices of current degree <= threshold (lowest id
// first).  Empty result only when the threshold permits exhaustion; at the
// default threshold d(G)/2 a graph with at least one edge always retains a
// nonempty subgraph, whose minimum degree is then > threshold.
std::optional<Graph::Induced> min_degree_subgraph(const Graph& g, const Rational& threshold);
std::optional<Graph::Induced> min_degree_subgraph(const Graph& g);  // threshold d(G)/2

} // namespace berge

#endif
