#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "berge/tree_enum.hpp"

namespace berge::oracle {

namespace {

bool assign_edges(const MultiHypergraph& h, const Tree& t, const std::vector<int>& img,
                  std::size_t edge_at, std::vector<char>& used) {
    if (edge_at == t.edges().size()) return true;
    auto [u, v] = t.edges()[edge_at];
    for (int inst = 0; inst < h.edge_count(); ++inst) {
        if (used[inst]) continue;
        const auto& e = h.edge(inst);
        if (!std::binary_search(e.begin(), e.end(), img[u])) continue;
        if (!std::binary_search(e.begin(), e.end(), img[v])) continue;
        used[inst] = 1;
        if (assign_edges(h, t, img, edge_at + 1, used)) return true;
        used[inst] = 0;
    }
    return false;
}

bool place_vertices(const MultiHypergraph& h, const Tree& t, std::vector<int>& img,
                    int tree_vertex, std::vector<char>& taken) {
    if (tree_vertex == t.vertex_count()) {
        std::vector<char> used(h.edge_count(), 0);
        return assign_edges(h, t, img, 0, used);
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (taken[v]) continue;
        taken[v] = 1;
        img[tree_vertex] = v;
        if (place_vertices(h, t, img, tree_vertex + 1, taken)) return true;
        taken[v] = 0;
    }
    return false;
}

// all-roots encoding: minimum over every root of the sorted-children code
std::string all_roots_code(const Tree& t) {
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int u : t.adjacency()[v])
            if (u != parent) kids.push_back(enc(u, v));
        std::sort(kids.begin(), kids.end());
        std::string out = "[";
        for (auto& s : kids) out += s;
        return out + "]";
    };
    std::string best;
    for (int root = 0; root < t.vertex_count(); ++root) {
        std::string s = enc(root, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

bool contains_berge_copy(const MultiHypergraph& h, const Tree& t) {
    if (t.vertex_count() > h.vertex_count()) return false;
    std::vector<int> img(t.vertex_count(), -1);
    std::vector<char> taken(h.vertex_count(), 0);
    return place_vertices(h, t, img, 0, taken);
}

long long tree_census(int k) {
    std::set<std::string> classes;
    const int n = k + 1;
    if (k == 1) return 1;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        classes.insert(all_roots_code(tree_from_pruefer(seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<long long>(classes.size());
}

MultiHypergraph random_hypergraph(int n, int r, int edges, std::mt19937& rng) {
    std::vector<std::vector<int>> list;
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int e = 0; e < edges; ++e) {
        std::shuffle(ids.begin(), ids.end(), rng);
        list.emplace_back(ids.begin(), ids.begin() + r);
    }
    return MultiHypergraph(n, r, std::move(list));
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        Graph g(n);
        long long added = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) {
                    g.add_edge(u, v);
                    ++added;
                }
        if (added == 0) continue;
        g.finalize();
        return g;
    }
}

}  // namespace berge::oracle
