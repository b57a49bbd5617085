#include "berge/berge_search.hpp"

#include <algorithm>
#include <cassert>

namespace berge {

namespace {

// Connected elimination order usable for every tree.  Non-stars get the
// proof-shaped prefix order (leaf start, 3-edge initial path); stars get
// leaf, center, then the remaining leaves.
PrefixOrder search_order(const Tree& t) {
    const int k = t.edge_count();
    if (classify_tree(t).kind != TreeKind::Star) return prefix_order(t);
    int center = 0;
    for (int v = 0; v <= k; ++v)
        if (t.degree(v) == k) center = v;
    PrefixOrder po;
    if (k == 1) {
        po.order = {0, 1};
    } else {
        int first_leaf = -1;
        for (int v = 0; v <= k && first_leaf < 0; ++v)
            if (v != center) first_leaf = v;
        po.order = {first_leaf, center};
        for (int v = 0; v <= k; ++v)
            if (v != center && v != first_leaf) po.order.push_back(v);
    }
    po.parent_pos.assign(k + 1, -1);
    po.edge_index.assign(k + 1, -1);
    std::vector<int> pos_of(k + 1);
    for (int i = 0; i <= k; ++i) pos_of[po.order[i]] = i;
    for (int i = 1; i <= k; ++i) {
        int v = po.order[i];
        for (int u : t.adjacency()[v])
            if (pos_of[u] < i) {
                po.parent_pos[i] = pos_of[u];
                auto key = std::minmax(u, v);
                auto it = std::lower_bound(t.edges().begin(), t.edges().end(),
                                           std::make_pair(key.first, key.second));
                po.edge_index[i] = static_cast<int>(it - t.edges().begin());
            }
    }
    return po;
}

struct Searcher {
    const MultiHypergraph& h;
    const Tree& t;
    PrefixOrder po;
    int k;
    std::vector<int> cand;        // instance indices of the current component
    std::vector<char> edge_used;  // by instance index
    VertexSet vert_used;
    std::vector<int> img;       // tree vertex -> host vertex, -1 unplaced
    std::vector<int> pos_edge;  // position -> assigned instance

    // matching scratch
    std::vector<int> match_owner;  // instance -> position or -1

    Searcher(const MultiHypergraph& hg, const Tree& tr)
        : h(hg), t(tr), po(search_order(tr)), k(tr.edge_count()),
          edge_used(hg.edge_count(), 0), vert_used(hg.vertex_count()),
          img(tr.vertex_count(), -1), pos_edge(tr.vertex_count(), -1),
          match_owner(hg.edge_count(), -1) {}

    bool instance_compatible(int pos, int inst) const {
        int pp = po.parent_pos[pos];
        int parent_img = img[po.order[pp]];
        if (parent_img < 0) return true;  // attachment not yet placed
        return h.edge_set(inst).contains(parent_img);
    }

    bool try_augment(int pos, std::vector<char>& visited) {
        for (int inst : cand) {
            if (edge_used[inst] || visited[inst]) continue;
            if (!instance_compatible(pos, inst)) continue;
            visited[inst] = 1;
            if (match_owner[inst] < 0 || try_augment(match_owner[inst], visited)) {
                match_owner[inst] = pos;
                return true;
            }
        }
        return false;
    }

    // Every still-unassigned tree edge must be matchable to a distinct
    // unused instance containing its placed attachment vertex.
    bool feasible(int next_pos) {
        for (int inst : cand) match_owner[inst] = -1;
        std::vector<char> visited(h.edge_count(), 0);
        for (int pos = next_pos; pos <= k; ++pos) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!try_augment(pos, visited)) return false;
        }
        return true;
    }

    std::optional<BergeEmbedding> result;

    bool dfs(int pos) {
        if (pos > k) {
            BergeEmbedding emb;
            emb.vertex_map = img;
            emb.edge_map.assign(k, -1);
            for (int p = 1; p <= k; ++p) emb.edge_map[po.edge_index[p]] = pos_edge[p];
            assert(verify_embedding(h, t, emb));
            result = emb;
            return true;
        }
        int parent_img = img[po.order[po.parent_pos[pos]]];
        for (int inst : cand) {
            if (edge_used[inst]) continue;
            const VertexSet& es = h.edge_set(inst);
            if (!es.contains(parent_img)) continue;
            edge_used[inst] = 1;
            pos_edge[pos] = inst;
            for (int v : h.edge(inst)) {
                if (vert_used.contains(v)) continue;
                img[po.order[pos]] = v;
                vert_used.add(v);
                if (feasible(pos + 1) && dfs(pos + 1)) return true;
                vert_used.remove(v);
            }
            img[po.order[pos]] = -1;
            pos_edge[pos] = -1;
            edge_used[inst] = 0;
        }
        return false;
    }

    bool run_component(const std::vector<int>& component) {
        cand = component;
        // root step: choose the first edge and both endpoints of the first
        // tree edge together
        for (int inst : cand) {
            const auto& verts = h.edge(inst);
            edge_used[inst] = 1;
            pos_edge[1] = inst;
            for (int a : verts) {
                img[po.order[0]] = a;
                vert_used.add(a);
                for (int b : verts) {
                    if (b == a) continue;
                    img[po.order[1]] = b;
                    vert_used.add(b);
                    if (feasible(2) && dfs(2)) return true;
                    vert_used.remove(b);
                }
                img[po.order[1]] = -1;
                vert_used.remove(a);
            }
            img[po.order[0]] = -1;
            pos_edge[1] = -1;
            edge_used[inst] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<BergeEmbedding> find_berge_copy(const MultiHypergraph& h, const Tree& t) {
    const int k = t.edge_count();
    if (t.vertex_count() > h.vertex_count()) return std::nullopt;  // no injection
    if (h.edge_count() < k) return std::nullopt;

    // adjacent tree edges share an image vertex, so a copy lives in a single
    // overlap component
    for (const auto& component : h.edge_components()) {
        if (static_cast<int>(component.size()) < k) continue;
        VertexSet span(h.vertex_count());
        for (int i : component) span = span.unite(h.edge_set(i));
        if (span.count() < k + 1) continue;
        Searcher s(h, t);
        if (s.run_component(component)) return s.result;
    }
    return std::nullopt;
}

} // namespace berge
