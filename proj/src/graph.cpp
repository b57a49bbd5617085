#include "berge/graph.hpp"

#include <algorithm>
#include <set>

#include "berge/errors.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw PreconditionError("graph: self-loop");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw PreconditionError("graph: endpoint out of range");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
}

void Graph::finalize() {
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw PreconditionError("graph: parallel edge");
    }
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Rational Graph::average_degree() const {
    if (vertex_count() == 0) return Rational(0);
    return Rational(2 * m_, vertex_count());
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph::Induced Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> ids = keep;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> new_id(vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= vertex_count())
            throw PreconditionError("induced: vertex out of range");
        new_id[ids[i]] = static_cast<int>(i);
    }
    Graph g(static_cast<int>(ids.size()));
    for (int u : ids)
        for (int v : adj_[u])
            if (u < v && new_id[v] >= 0) g.add_edge(new_id[u], new_id[v]);
    g.finalize();
    return Induced{std::move(g), std::move(ids)};
}

IncidenceGraph incidence_graph(const MultiHypergraph& h) {
    IncidenceGraph ig;
    ig.left = h.vertex_count();
    ig.right = h.edge_count();
    Graph g(ig.left + ig.right);
    for (int i = 0; i < h.edge_count(); ++i)
        for (int v : h.edge(i)) g.add_edge(v, ig.left + i);
    g.finalize();
    ig.graph = std::move(g);
    return ig;
}

bool check_average_deletion(const Graph& g, const std::vector<int>& subset) {
    std::set<int> sel(subset.begin(), subset.end());
    for (int v : sel)
        if (v < 0 || v >= g.vertex_count())
            throw PreconditionError("average-deletion: vertex out of range");
    if (static_cast<int>(sel.size()) == g.vertex_count())
        throw PreconditionError("average-deletion: subset must be proper");
    long long incident = 0;
    for (auto [u, v] : g.edge_list())
        if (sel.count(u) || sel.count(v)) ++incident;
    // incident <= (e/v) * |subset|, cross-multiplied
    if (Rational(incident) > g.average_degree() * Rational(static_cast<long long>(sel.size()), 2))
        return false;
    // contract: deleting an average-light subset cannot lower the average
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!sel.count(v)) keep.push_back(v);
    Graph rest = g.induced(keep).graph;
    if (rest.average_degree() < g.average_degree())
        throw TheoremViolation("average degree dropped after a light deletion");
    return true;
}

std::optional<Graph::Induced> min_degree_subgraph(const Graph& g, const Rational& threshold) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && Rational(deg[v]) <= threshold) { pick = v; break; }
        if (pick < 0) break;
        alive[pick] = 0;
        --remaining;
        for (int u : g.neighbors(pick))
            if (alive[u]) --deg[u];
    }
    if (remaining == 0) return std::nullopt;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return g.induced(keep);
}

std::optional<Graph::Induced> min_degree_subgraph(const Graph& g) {
    return min_degree_subgraph(g, g.average_degree() / Rational(2));
}

} // namespace berge
