#include "berge/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "berge/errors.hpp"
#include "berge/tree.hpp"

namespace berge {

MultiHypergraph::MultiHypergraph(int n, int r, std::vector<std::vector<int>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    if (n > VertexSet::kMaxVertices)
        throw PreconditionError("vertex count exceeds supported width");
    if (r < 1) throw PreconditionError("uniformity must be positive");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw ParseError("hyperedge of wrong arity: expected " + std::to_string(r_) +
                             " vertices, got " + std::to_string(e.size()));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw ParseError("vertex id " + std::to_string(e[i]) + " out of range [0," +
                                 std::to_string(n_) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw ParseError("duplicate vertex " + std::to_string(e[i]) + " within a hyperedge");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    sets_.reserve(edges_.size());
    for (const auto& e : edges_) sets_.push_back(VertexSet::of(n_, e));
}

bool MultiHypergraph::is_simple() const {
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) return false;
    return true;
}

std::vector<int> MultiHypergraph::degree_profile() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_)
        for (int v : e) ++deg[v];
    return deg;
}

std::vector<std::vector<int>> MultiHypergraph::vertex_incidence() const {
    std::vector<std::vector<int>> inc(n_);
    for (int i = 0; i < edge_count(); ++i)
        for (int v : edges_[i]) inc[v].push_back(i);
    return inc;
}

std::vector<std::vector<int>> MultiHypergraph::edge_components() const {
    const int m = edge_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> owner(n_, -1);  // first edge seen at each vertex
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i) {
        for (int v : edges_[i]) {
            if (owner[v] < 0) {
                owner[v] = i;
            } else {
                int a = find(owner[v]), b = find(i);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> slot(m, -1);
    for (int i = 0; i < m; ++i) {
        int root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[slot[root]].push_back(i);
    }
    return groups;
}

std::string MultiHypergraph::serialize() const {
    std::ostringstream out;
    out << n_ << ' ' << r_ << '\n';
    for (const auto& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

namespace {
std::vector<long long> parse_int_line(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<long long> vals;
    long long x;
    while (ss >> x) vals.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError("line " + std::to_string(lineno) + ": non-numeric token '" + rest + "'");
    return vals;
}
}  // namespace

MultiHypergraph MultiHypergraph::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, r = 0;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto vals = parse_int_line(line, lineno);
        if (!have_header) {
            if (vals.size() != 2)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": header must be 'n r'");
            n = vals[0];
            r = vals[1];
            if (n < 0 || n > VertexSet::kMaxVertices || r < 1)
                throw ParseError("line " + std::to_string(lineno) + ": bad header values");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(vals.size()) != r)
            throw ParseError("line " + std::to_string(lineno) + ": hyperedge of wrong arity");
        std::vector<int> e;
        e.reserve(vals.size());
        for (long long v : vals) {
            if (v < 0 || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex id " +
                                 std::to_string(v) + " out of range");
            e.push_back(static_cast<int>(v));
        }
        std::sort(e.begin(), e.end());
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1])
                throw ParseError("line " + std::to_string(lineno) +
                                 ": duplicate vertex within a hyperedge");
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError("missing 'n r' header line");
    return MultiHypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

MultiHypergraph MultiHypergraph::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

MultiHypergraph::WithEdge MultiHypergraph::with_edge(const std::vector<int>& edge) const {
    auto list = edges_;
    list.push_back(edge);
    MultiHypergraph h(n_, r_, std::move(list));
    // recover the instance remap: equal instances keep their relative order
    std::vector<int> remap(edge_count(), -1);
    int cursor = 0;
    for (int i = 0; i < edge_count(); ++i) {
        while (h.edges_[cursor] < edges_[i]) ++cursor;
        remap[i] = cursor++;
    }
    int new_index = -1;
    for (int i = 0, j = 0; i < h.edge_count(); ++i) {
        if (j < edge_count() && remap[j] == i) { ++j; continue; }
        new_index = i;
    }
    return WithEdge{std::move(h), std::move(remap), new_index};
}

MultiHypergraph::Induced MultiHypergraph::induced(const std::vector<int>& keep_vertices) const {
    std::vector<int> keep = keep_vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> new_id(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n_)
            throw PreconditionError("induced: vertex id out of range");
        new_id[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> sub;
    std::vector<int> edge_orig;
    for (int i = 0; i < edge_count(); ++i) {
        bool inside = true;
        for (int v : edges_[i])
            if (new_id[v] < 0) { inside = false; break; }
        if (!inside) continue;
        std::vector<int> e;
        e.reserve(r_);
        for (int v : edges_[i]) e.push_back(new_id[v]);
        sub.push_back(std::move(e));
        edge_orig.push_back(i);
    }
    // relabeled edges keep their relative order (new ids are monotone), so
    // edge_orig stays aligned after the normalizing sort
    MultiHypergraph h(static_cast<int>(keep.size()), r_, std::move(sub));
    return Induced{std::move(h), std::move(keep), std::move(edge_orig)};
}

bool verify_embedding(const MultiHypergraph& h, const Tree& t, const BergeEmbedding& emb) {
    const int k = t.edge_count();
    if (static_cast<int>(emb.vertex_map.size()) != k + 1 ||
        static_cast<int>(emb.edge_map.size()) != k)
        throw std::out_of_range("embedding has wrong map sizes for this tree");
    for (int v : emb.vertex_map)
        if (v < 0 || v >= h.vertex_count())
            throw std::out_of_range("embedding vertex image out of range");
    for (int e : emb.edge_map)
        if (e < 0 || e >= h.edge_count())
            throw std::out_of_range("embedding edge image out of range");

    std::vector<int> sorted_images = emb.vertex_map;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) != sorted_images.end())
        return false;  // vertex map not injective
    std::vector<int> sorted_edges = emb.edge_map;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
        return false;  // instances not pairwise distinct
    for (int i = 0; i < k; ++i) {
        auto [u, v] = t.edges()[i];
        const VertexSet& host = h.edge_set(emb.edge_map[i]);
        if (!host.contains(emb.vertex_map[u]) || !host.contains(emb.vertex_map[v]))
            return false;  // endpoint not covered
    }
    return true;
}

std::string serialize_embedding(const BergeEmbedding& emb) {
    std::ostringstream out;
    out << "vmap:";
    for (std::size_t i = 0; i < emb.vertex_map.size(); ++i)
        out << ' ' << i << "->" << emb.vertex_map[i];
    out << "\nemap:";
    for (std::size_t i = 0; i < emb.edge_map.size(); ++i)
        out << ' ' << i << "->" << emb.edge_map[i];
    out << '\n';
    return out.str();
}

} // namespace berge
