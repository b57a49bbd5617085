#include "berge/tree.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

#include "berge/errors.hpp"

namespace berge {

namespace {

// AHU subtree code: children codes sorted and wrapped.  Strings are fine at
// this scale (k <= 10).
std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child;
    for (int u : adj[v])
        if (u != parent) child.push_back(ahu_code(adj, u, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

std::vector<int> find_centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> size(n, 1), heaviest(n, 0);
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        for (int u : adj[v])
            if (u != parent) {
                dfs(u, v);
                size[v] += size[u];
                heaviest[v] = std::max(heaviest[v], size[u]);
            }
        heaviest[v] = std::max(heaviest[v], n - size[v]);
    };
    dfs(0, -1);
    int best = n + 1;
    for (int v = 0; v < n; ++v) best = std::min(best, heaviest[v]);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (heaviest[v] == best) out.push_back(v);
    return out;  // one or two, adjacent when two
}

}  // namespace

Tree::Tree(int k, std::vector<std::pair<int, int>> edges) : k_(k), edges_(std::move(edges)) {
    if (k_ < 1) throw PreconditionError("tree must have at least one edge");
    if (static_cast<int>(edges_.size()) != k_)
        throw ParseError("tree edge list has wrong length");
    adj_.assign(k_ + 1, {});
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v > k_ || u == v)
            throw ParseError("tree edge endpoints must be distinct ids in 0..k");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) throw ParseError("tree has a repeated edge");
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    // k+1 vertices with k distinct edges: connectivity alone certifies a tree
    std::vector<char> seen(k_ + 1, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    if (visited != k_ + 1) throw ParseError("tree is not connected");

    auto centroids = find_centroids(adj_);
    code_.clear();
    for (int c : centroids) {
        std::string s = ahu_code(adj_, c, -1);
        if (code_.empty() || s < code_) code_ = s;
    }
}

int Tree::max_degree() const {
    int best = 0;
    for (int v = 0; v <= k_; ++v) best = std::max(best, degree(v));
    return best;
}

Tree Tree::canonical_relabel() const {
    auto centroids = find_centroids(adj_);
    int root = centroids[0];
    if (centroids.size() == 2 && ahu_code(adj_, centroids[1], -1) < ahu_code(adj_, centroids[0], -1))
        root = centroids[1];
    std::vector<int> new_id(k_ + 1, -1);
    std::vector<std::pair<int, int>> out;
    int next = 0;
    std::function<void(int, int)> emit = [&](int v, int parent) {
        new_id[v] = next++;
        std::vector<std::pair<std::string, int>> kids;
        for (int u : adj_[v])
            if (u != parent) kids.emplace_back(ahu_code(adj_, u, v), u);
        std::sort(kids.begin(), kids.end());
        for (auto& [code, u] : kids) {
            out.emplace_back(new_id[v], next);  // child id assigned on entry
            emit(u, v);
        }
    };
    emit(root, -1);
    return Tree(k_, std::move(out));
}

std::string Tree::serialize() const {
    std::ostringstream out;
    out << k_ << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

Tree Tree::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long k = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        if (k < 0) {
            if (!(ss >> k) || k < 1)
                throw ParseError("tree line " + std::to_string(lineno) + ": expected edge count");
            continue;
        }
        long long u, v;
        if (!(ss >> u >> v))
            throw ParseError("tree line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (k < 0) throw ParseError("tree file missing edge-count header");
    return Tree(static_cast<int>(k), std::move(edges));
}

Tree Tree::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

const char* tree_kind_name(TreeKind kind) {
    switch (kind) {
        case TreeKind::Star: return "star";
        case TreeKind::Path: return "path";
        case TreeKind::BalancedDoubleStar: return "balanced_double_star";
        case TreeKind::Other: return "other";
    }
    return "?";
}

TreeClass classify_tree(const Tree& t) {
    const int k = t.edge_count();
    if (t.max_degree() == k) return {TreeKind::Star, k};
    if (t.max_degree() <= 2) return {TreeKind::Path, k};
    if (k % 2 == 1) {
        // two adjacent centers of degree (k+1)/2, everything else a leaf
        std::vector<int> centers;
        bool rest_leaves = true;
        for (int v = 0; v <= k; ++v) {
            if (t.degree(v) == (k + 1) / 2)
                centers.push_back(v);
            else if (!t.is_leaf(v))
                rest_leaves = false;
        }
        if (rest_leaves && centers.size() == 2) {
            const auto& a = t.adjacency()[centers[0]];
            if (std::binary_search(a.begin(), a.end(), centers[1]))
                return {TreeKind::BalancedDoubleStar, k};
        }
    }
    return {TreeKind::Other, k};
}

namespace {
int internal_neighbor_count(const Tree& t, int v) {
    int c = 0;
    for (int u : t.adjacency()[v])
        if (!t.is_leaf(u)) ++c;
    return c;
}
}  // namespace

std::pair<int, int> low_degree_internal_vertex(const Tree& t) {
    const int k = t.edge_count();
    if (classify_tree(t).kind == TreeKind::Star)
        throw PreconditionError("low-degree internal vertex: tree is a star");
    for (int v = 0; v <= k; ++v) {
        if (t.is_leaf(v)) continue;
        if (internal_neighbor_count(t, v) != 1) continue;
        if (2 * t.degree(v) <= k + 1) return {v, t.degree(v)};
    }
    // stripping every leaf of a non-star leaves >= 2 internal vertices; the
    // two end ones share at most one of the k edges, so one of them fits
    throw TheoremViolation("no qualifying low-degree internal vertex found");
}

PrefixOrder prefix_order(const Tree& t) {
    const int k = t.edge_count();
    if (classify_tree(t).kind == TreeKind::Star)
        throw PreconditionError("prefix order: tree is a star");

    // w: internal vertex with exactly one internal neighbor z.  Its other
    // neighbors are leaves, so a leaf start and a 3-edge path both exist.
    int w = -1;
    for (int v = 0; v <= k && w < 0; ++v)
        if (!t.is_leaf(v) && internal_neighbor_count(t, v) == 1) w = v;
    if (w < 0) throw TheoremViolation("non-star tree without an internal fringe vertex");
    int leaf = -1, z = -1;
    for (int u : t.adjacency()[w]) {
        if (t.is_leaf(u) && leaf < 0) leaf = u;
        if (!t.is_leaf(u)) z = u;
    }
    int x3 = -1;
    for (int u : t.adjacency()[z])
        if (u != w) { x3 = u; break; }

    PrefixOrder po;
    po.order = {leaf, w, z, x3};
    std::vector<char> used(k + 1, 0);
    for (int v : po.order) used[v] = 1;
    while (static_cast<int>(po.order.size()) < k + 1) {
        int pick = -1;
        for (int v = 0; v <= k && pick < 0; ++v) {
            if (used[v]) continue;
            for (int u : t.adjacency()[v])
                if (used[u]) { pick = v; break; }
        }
        used[pick] = 1;
        po.order.push_back(pick);
    }

    po.parent_pos.assign(k + 1, -1);
    po.edge_index.assign(k + 1, -1);
    std::vector<int> pos_of(k + 1, -1);
    for (int i = 0; i <= k; ++i) pos_of[po.order[i]] = i;
    for (int i = 1; i <= k; ++i) {
        int v = po.order[i];
        for (int u : t.adjacency()[v]) {
            if (pos_of[u] < i) {
                po.parent_pos[i] = pos_of[u];  // unique: a second one would close a cycle
                auto key = std::minmax(u, v);
                auto it = std::lower_bound(t.edges().begin(), t.edges().end(),
                                           std::make_pair(key.first, key.second));
                po.edge_index[i] = static_cast<int>(it - t.edges().begin());
            }
        }
    }
    return po;
}

} // namespace berge
