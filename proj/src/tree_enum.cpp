#include "berge/tree_enum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <mutex>

#include "berge/errors.hpp"

namespace berge {

Tree tree_from_pruefer(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Tree(n - 1, std::move(edges));
}

namespace {

void collect(std::map<std::string, Tree>& classes, const Tree& t) {
    auto it = classes.find(t.canonical_code());
    if (it == classes.end()) classes.emplace(t.canonical_code(), t.canonical_relabel());
}

// Flat-array decoder and centroid code for the hot labeled-tree sweep; full
// Tree objects are only built for codes seen for the first time.
struct PrueferSweep {
    int n;
    std::vector<int> deg, head, next_edge, to;  // adjacency as linked lists
    std::vector<int> size_buf, order, parent;

    explicit PrueferSweep(int vertices)
        : n(vertices), deg(vertices), head(vertices), next_edge(2 * (vertices - 1)),
          to(2 * (vertices - 1)), size_buf(vertices), order(vertices), parent(vertices) {}

    std::vector<std::pair<int, int>> edges;

    void decode(const std::vector<int>& seq) {
        edges.clear();
        std::fill(deg.begin(), deg.end(), 1);
        for (int v : seq) ++deg[v];
        // classic pointer decode, O(n)
        int ptr = 0;
        while (deg[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int v : seq) {
            edges.emplace_back(leaf, v);
            if (--deg[v] == 1 && v < ptr) {
                leaf = v;
            } else {
                ++ptr;
                while (deg[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        edges.emplace_back(leaf, n - 1);
    }

    void build_adjacency() {
        std::fill(head.begin(), head.end(), -1);
        std::fill(deg.begin(), deg.end(), 0);
        int slot = 0;
        for (auto [u, v] : edges) {
            to[slot] = v;
            next_edge[slot] = head[u];
            head[u] = slot++;
            to[slot] = u;
            next_edge[slot] = head[v];
            head[v] = slot++;
            ++deg[u];
            ++deg[v];
        }
    }

    // iterative rooted traversal: order[] is a BFS order, parent[] its tree
    void orient(int root) {
        int count = 0;
        order[count++] = root;
        parent[root] = -1;
        for (int at = 0; at < count; ++at) {
            int v = order[at];
            for (int e = head[v]; e >= 0; e = next_edge[e])
                if (to[e] != parent[v]) {
                    parent[to[e]] = v;
                    order[count++] = to[e];
                }
        }
    }

    std::vector<int> centroids() {
        orient(0);
        for (int i = n - 1; i >= 0; --i) {
            int v = order[i];
            size_buf[v] = 1;
            for (int e = head[v]; e >= 0; e = next_edge[e])
                if (to[e] != parent[v]) size_buf[v] += size_buf[to[e]];
        }
        std::vector<int> out;
        int best = n + 1;
        for (int v = 0; v < n; ++v) {
            int heaviest = n - size_buf[v];
            for (int e = head[v]; e >= 0; e = next_edge[e])
                if (to[e] != parent[v]) heaviest = std::max(heaviest, size_buf[to[e]]);
            if (heaviest < best) {
                best = heaviest;
                out.clear();
            }
            if (heaviest == best) out.push_back(v);
        }
        return out;
    }

    std::string code_from(int root) {
        orient(root);
        std::vector<std::string> code(n);
        for (int i = n - 1; i >= 0; --i) {
            int v = order[i];
            std::vector<std::string> kids;
            for (int e = head[v]; e >= 0; e = next_edge[e])
                if (to[e] != parent[v]) kids.push_back(std::move(code[to[e]]));
            std::sort(kids.begin(), kids.end());
            std::string& out = code[v];
            out = "(";
            for (auto& s : kids) out += s;
            out += ")";
        }
        return code[root];
    }

    std::string canonical_code() {
        build_adjacency();
        std::string best;
        for (int c : centroids()) {
            std::string s = code_from(c);
            if (best.empty() || s < best) best = s;
        }
        return best;
    }
};

void enumerate_by_pruefer(int k, std::map<std::string, Tree>& classes) {
    const int n = k + 1;
    if (k == 1) {
        collect(classes, Tree(1, {{0, 1}}));
        return;
    }
    PrueferSweep sweep(n);
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        sweep.decode(seq);
        std::string code = sweep.canonical_code();
        if (!classes.count(code)) {
            Tree t(k, sweep.edges);
            if (t.canonical_code() != code)
                throw std::logic_error("sweep code disagrees with the tree code");
            classes.emplace(code, t.canonical_relabel());
        }
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

// Rooted trees by level sequence, lexicographically descending from the
// path [1,2,..,n] down to the star [1,2,2,..,2]; the underlying free trees
// are deduplicated by canonical code.
void enumerate_by_level_sequences(int k, std::map<std::string, Tree>& classes) {
    const int n = k + 1;
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) {
            int parent = -1;
            for (int j = i - 1; j >= 0; --j)
                if (level[j] == level[i] - 1) { parent = j; break; }
            edges.emplace_back(parent, i);
        }
        collect(classes, Tree(k, std::move(edges)));

        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[i] > 2) { p = i; break; }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) { q = i; break; }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
}

}  // namespace

std::vector<Tree> enumerate_trees(int k) {
    if (k < 1 || k > 10)
        throw PreconditionError("tree catalog supports 1 <= k <= 10, got " + std::to_string(k));
    static std::mutex memo_mutex;
    static std::map<int, std::vector<Tree>> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
    }
    std::map<std::string, Tree> classes;
    if (k <= 8)
        enumerate_by_pruefer(k, classes);
    else
        enumerate_by_level_sequences(k, classes);
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, tree] : classes) out.push_back(std::move(tree));
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(k, out);
    return out;
}

} // namespace berge
