#include "berge/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

namespace {

// Iterated refinement over the incidence structure: a vertex's color is
// refined by the multiset of its edges' color profiles.  Invariant under
// isomorphism, so the canonical search may fix the class sequence.
std::vector<int> refine_colors(const MultiHypergraph& h) {
    const int n = h.vertex_count();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n + 1; ++round) {
        std::vector<std::vector<int>> edge_profile(h.edge_count());
        for (int e = 0; e < h.edge_count(); ++e) {
            for (int v : h.edge(e)) edge_profile[e].push_back(color[v]);
            std::sort(edge_profile[e].begin(), edge_profile[e].end());
        }
        std::vector<std::pair<std::vector<std::vector<int>>, int>> key(n);
        auto incidence = h.vertex_incidence();
        for (int v = 0; v < n; ++v) {
            std::vector<std::vector<int>> profs;
            for (int e : incidence[v]) profs.push_back(edge_profile[e]);
            std::sort(profs.begin(), profs.end());
            key[v] = {std::move(profs), color[v]};
        }
        std::map<std::pair<std::vector<std::vector<int>>, int>, int> dense;
        for (int v = 0; v < n; ++v) dense.emplace(key[v], 0);
        int next = 0;
        for (auto& [k, id] : dense) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = dense[key[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

struct CanonSearch {
    const MultiHypergraph& h;
    int n, r;
    std::map<std::vector<int>, int> multiplicity;  // sorted original edge -> count
    std::vector<int> class_of_position;            // target class per new id
    std::vector<std::vector<int>> class_members;   // original vertices per class

    std::vector<int> perm;     // new id -> original vertex
    std::vector<char> taken;   // original vertex used
    std::vector<int> current;  // colex multiplicity prefix
    std::vector<int> best;     // best complete vector
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonSearch(const MultiHypergraph& hg)
        : h(hg), n(hg.vertex_count()), r(hg.uniformity()), taken(hg.vertex_count(), 0) {
        for (const auto& e : h.edges()) ++multiplicity[e];
        auto color = refine_colors(h);
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
        for (auto& [c, members] : by_color) class_members.push_back(members);
        for (std::size_t c = 0; c < class_members.size(); ++c)
            for (std::size_t i = 0; i < class_members[c].size(); ++i)
                class_of_position.push_back(static_cast<int>(c));
    }

    int lookup(std::vector<int> orig) {
        std::sort(orig.begin(), orig.end());
        auto it = multiplicity.find(orig);
        return it == multiplicity.end() ? 0 : it->second;
    }

    // multiplicities of the r-subsets of {0..j} that contain j, the subsets
    // below j enumerated in colex order; the concatenation over j is a
    // complete description of the relabeled hypergraph
    void determined_row(int j, std::vector<int>& out) {
        if (r - 1 > j) return;
        if (r == 1) {
            out.push_back(lookup({perm[j]}));
            return;
        }
        std::vector<int> idx(r - 1);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<int> orig;
            orig.reserve(r);
            for (int i : idx) orig.push_back(perm[i]);
            orig.push_back(perm[j]);
            out.push_back(lookup(std::move(orig)));
            int i = 0;
            for (; i < r - 1; ++i) {
                int limit = (i + 1 < r - 1) ? idx[i + 1] : j;
                if (idx[i] + 1 < limit) break;
            }
            if (i == r - 1) break;
            ++idx[i];
            for (int l = 0; l < i; ++l) idx[l] = l;
        }
    }

    // -1: prefix already worse than best (prune); 0: equal so far; 1: better
    int compare_with_best(std::size_t upto) {
        if (!have_best) return 1;
        for (std::size_t i = current.size() - upto; i < current.size(); ++i) {
            if (current[i] < best[i]) return 1;
            if (current[i] > best[i]) return -1;
        }
        return 0;
    }

    void dfs(int position, bool strictly_better) {
        if (position == n) {
            if (!have_best || strictly_better) {
                best = current;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        for (int v : class_members[class_of_position[position]]) {
            if (taken[v]) continue;
            taken[v] = 1;
            perm.push_back(v);
            std::size_t before = current.size();
            determined_row(position, current);
            std::size_t added = current.size() - before;
            int cmp = strictly_better ? 1 : compare_with_best(added);
            if (cmp >= 0) dfs(position + 1, strictly_better || cmp == 1);
            current.resize(before);
            perm.pop_back();
            taken[v] = 0;
        }
    }

    MultiHypergraph run() {
        perm.reserve(n);
        dfs(0, false);
        std::vector<int> orig_to_new(n);
        for (int i = 0; i < n; ++i) orig_to_new[best_perm[i]] = i;
        std::vector<std::vector<int>> edges;
        edges.reserve(h.edge_count());
        for (const auto& e : h.edges()) {
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int v : e) mapped.push_back(orig_to_new[v]);
            edges.push_back(std::move(mapped));
        }
        return MultiHypergraph(n, r, std::move(edges));
    }
};

}  // namespace

MultiHypergraph canonical_form(const MultiHypergraph& h) {
    if (h.vertex_count() == 0) return h;
    CanonSearch s(h);
    return s.run();
}

std::string canonical_key(const MultiHypergraph& h) { return canonical_form(h).serialize(); }

bool isomorphic(const MultiHypergraph& a, const MultiHypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    return canonical_key(a) == canonical_key(b);
}

} // namespace berge
