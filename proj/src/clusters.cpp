#include "berge/clusters.hpp"

#include <algorithm>
#include <functional>
#include <cassert>
#include <set>

#include "berge/errors.hpp"

namespace berge {

namespace {

ClusterWitness make_witness(const MultiHypergraph& h, std::vector<int> picked) {
    ClusterWitness w;
    std::sort(picked.begin(), picked.end());
    VertexSet core(h.vertex_count());
    VertexSet span(h.vertex_count());
    bool first = true;
    for (int i : picked) {
        if (first) { core = h.edge_set(i); first = false; }
        else core = core.intersect(h.edge_set(i));
        span = span.unite(h.edge_set(i));
    }
    w.edge_indices = std::move(picked);
    w.core = core.to_vector();
    w.span = span.to_vector();
    return w;
}

}  // namespace

std::vector<ClusterWitness> find_clusters(const MultiHypergraph& h, int k) {
    if (k < 2) throw PreconditionError("clusters require k >= 2");
    const int m = h.edge_count();
    const int need = k - 1;
    std::vector<char> avail(m, 1);
    std::vector<ClusterWitness> out;

    if (need == 1) {
        for (int i = 0; i < m; ++i) out.push_back(make_witness(h, {i}));
        return out;
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < m && !progress; ++i) {
            if (!avail[i]) continue;
            for (int j = i + 1; j < m && !progress; ++j) {
                if (!avail[j]) continue;
                VertexSet common = h.edge_set(i).intersect(h.edge_set(j));
                if (common.count() < need) continue;
                std::vector<int> picked{i, j};
                for (int l = 0; l < m && static_cast<int>(picked.size()) < need; ++l) {
                    if (!avail[l] || l == i || l == j) continue;
                    VertexSet next = common.intersect(h.edge_set(l));
                    if (next.count() >= need) {
                        common = next;
                        picked.push_back(l);
                    }
                }
                if (static_cast<int>(picked.size()) == need) {
                    for (int e : picked) avail[e] = 0;
                    out.push_back(make_witness(h, std::move(picked)));
                    progress = true;
                }
            }
        }
    }
    return out;
}

std::vector<ClusterWitness> enumerate_clusters_exhaustive(const MultiHypergraph& h, int k,
                                                          long long combination_guard) {
    if (k < 2) throw PreconditionError("clusters require k >= 2");
    const int m = h.edge_count();
    const int need = k - 1;
    if (need > m) return {};
    long long combos = 1;
    for (int i = 0; i < need; ++i) {
        combos = combos * (m - i) / (i + 1);
        if (combos > combination_guard)
            throw GuardExceeded("exhaustive cluster enumeration guard exceeded");
    }
    std::vector<ClusterWitness> out;
    std::vector<int> picked;
    VertexSet full(h.vertex_count());
    std::function<void(int, VertexSet)> rec = [&](int start, VertexSet common) {
        if (static_cast<int>(picked.size()) == need) {
            if (common.count() >= need) out.push_back(make_witness(h, picked));
            return;
        }
        for (int i = start; i < m; ++i) {
            VertexSet next = picked.empty() ? h.edge_set(i) : common.intersect(h.edge_set(i));
            if (next.count() < need) continue;  // intersections only shrink
            picked.push_back(i);
            rec(i + 1, next);
            picked.pop_back();
        }
    };
    rec(0, full);
    return out;
}

namespace {

struct AuditContext {
    const MultiHypergraph& h;
    const Tree& t;
    const ClusterWitness& s;
    std::vector<int> degrees;
    std::vector<std::vector<int>> incidence;
    std::set<int> cluster_edges;
    VertexSet core_set;

    AuditContext(const MultiHypergraph& hg, const Tree& tr, const ClusterWitness& cw)
        : h(hg), t(tr), s(cw), degrees(hg.degree_profile()), incidence(hg.vertex_incidence()),
          cluster_edges(cw.edge_indices.begin(), cw.edge_indices.end()),
          core_set(VertexSet::of(hg.vertex_count(), cw.core)) {}

    int smallest_unused_vertex(const std::vector<int>& edge, const VertexSet& used) const {
        for (int v : edge)
            if (!used.contains(v)) return v;
        return -1;
    }
};

[[noreturn]] void need_larger_uniformity(const std::string& where) {
    throw PreconditionError("cluster audit: constructive embedding ran out of spare room in " +
                            where + "; requires uniformity r >= k+1");
}

// Core-degree violation: embed T minus its two smallest leaves inside the
// core with the hot vertex at the first leaf's neighbor, close one leaf via
// the reserved last cluster edge, the other via the hot vertex's outside
// instance.
BergeEmbedding build_core_embedding(AuditContext& ctx, int hot) {
    const Tree& t = ctx.t;
    const int k = t.edge_count();
    std::vector<int> leaves;
    for (int v = 0; v <= k; ++v)
        if (t.is_leaf(v)) leaves.push_back(v);
    assert(leaves.size() >= 2);
    int x = leaves[0], y = leaves[1];
    int x_anchor = t.adjacency()[x][0];

    BergeEmbedding emb;
    emb.vertex_map.assign(k + 1, -1);
    emb.edge_map.assign(k, -1);
    VertexSet used(ctx.h.vertex_count());

    emb.vertex_map[x_anchor] = hot;
    used.add(hot);
    std::vector<int> core_pool;
    for (int v : ctx.s.core)
        if (v != hot) core_pool.push_back(v);
    std::size_t pool_at = 0;
    for (int v = 0; v <= k; ++v) {
        if (v == x || v == y || v == x_anchor) continue;
        assert(pool_at < core_pool.size());
        emb.vertex_map[v] = core_pool[pool_at++];
        used.add(emb.vertex_map[v]);
    }

    // interior edges onto the leading cluster edges, reserving the last one
    std::size_t next_cluster_edge = 0;
    const auto& ce = ctx.s.edge_indices;
    for (int e = 0; e < k; ++e) {
        auto [u, v] = t.edges()[e];
        if (u == x || v == x || u == y || v == y) continue;
        emb.edge_map[e] = ce[next_cluster_edge++];
    }
    assert(next_cluster_edge + 1 == ce.size());

    int last_edge = ce.back();
    int y_edge = -1, x_edge = -1;
    for (int e = 0; e < k; ++e) {
        auto [u, v] = t.edges()[e];
        if (u == y || v == y) y_edge = e;
        if (u == x || v == x) x_edge = e;
    }
    emb.edge_map[y_edge] = last_edge;
    int y_img = ctx.smallest_unused_vertex(ctx.h.edge(last_edge), used);
    if (y_img < 0) need_larger_uniformity("the reserved cluster edge");
    emb.vertex_map[y] = y_img;
    used.add(y_img);

    int outside = -1;
    for (int inst : ctx.incidence[hot])
        if (!ctx.cluster_edges.count(inst)) { outside = inst; break; }
    assert(outside >= 0);
    emb.edge_map[x_edge] = outside;
    int x_img = ctx.smallest_unused_vertex(ctx.h.edge(outside), used);
    if (x_img < 0) need_larger_uniformity("the outside instance");
    emb.vertex_map[x] = x_img;

    if (!verify_embedding(ctx.h, t, emb))
        throw TheoremViolation("core-degree audit produced a non-verifying embedding");
    return emb;
}

// Span-degree violation: the low-degree internal tree vertex sits at the hot
// span vertex, its leaves spread over the hot vertex's instances (one of
// them outside the cluster), and the rest of the tree walks through the
// core on the remaining cluster edges.
BergeEmbedding build_span_embedding(AuditContext& ctx, int hot) {
    const Tree& t = ctx.t;
    const int k = t.edge_count();
    auto [x, s_deg] = low_degree_internal_vertex(t);
    int y = -1;
    std::vector<int> x_leaves;
    for (int u : t.adjacency()[x]) {
        if (t.is_leaf(u)) x_leaves.push_back(u);
        else y = u;
    }
    assert(y >= 0 && static_cast<int>(x_leaves.size()) == s_deg - 1);

    int h1 = -1, h2 = -1;
    for (int inst : ctx.incidence[hot]) {
        if (h1 < 0 && !ctx.cluster_edges.count(inst)) h1 = inst;
        if (h2 < 0 && ctx.cluster_edges.count(inst)) h2 = inst;
    }
    assert(h1 >= 0 && h2 >= 0);
    std::vector<int> extra;
    for (int inst : ctx.incidence[hot]) {
        if (inst == h1 || inst == h2) continue;
        if (static_cast<int>(extra.size()) == s_deg - 2) break;
        extra.push_back(inst);
    }
    assert(static_cast<int>(extra.size()) == s_deg - 2);

    BergeEmbedding emb;
    emb.vertex_map.assign(k + 1, -1);
    emb.edge_map.assign(k, -1);
    VertexSet used(ctx.h.vertex_count());
    std::set<int> used_edges;

    emb.vertex_map[x] = hot;
    used.add(hot);

    int w = -1;
    for (int v : ctx.h.edge(h1))
        if (!ctx.core_set.contains(v) && v != hot) { w = v; break; }
    if (w < 0) need_larger_uniformity("the outside instance");
    int u_img = -1;
    for (int v : ctx.h.edge(h2))
        if (ctx.core_set.contains(v) && v != hot && v != w) { u_img = v; break; }
    assert(u_img >= 0);

    emb.vertex_map[y] = u_img;
    used.add(u_img);
    emb.vertex_map[x_leaves[0]] = w;
    used.add(w);

    auto edge_between = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = std::lower_bound(t.edges().begin(), t.edges().end(),
                                   std::make_pair(key.first, key.second));
        return static_cast<int>(it - t.edges().begin());
    };
    emb.edge_map[edge_between(x, x_leaves[0])] = h1;
    used_edges.insert(h1);
    emb.edge_map[edge_between(x, y)] = h2;
    used_edges.insert(h2);
    for (std::size_t i = 1; i < x_leaves.size(); ++i) {
        int inst = extra[i - 1];
        int leaf_img = ctx.smallest_unused_vertex(ctx.h.edge(inst), used);
        if (leaf_img < 0) need_larger_uniformity("a leaf instance");
        emb.vertex_map[x_leaves[i]] = leaf_img;
        used.add(leaf_img);
        emb.edge_map[edge_between(x, x_leaves[i])] = inst;
        used_edges.insert(inst);
    }

    // remaining subtree hangs off y; its images stay inside the core, its
    // edges take unused cluster instances (every one of them covers the core)
    std::vector<int> free_cluster_edges;
    for (int inst : ctx.s.edge_indices)
        if (!used_edges.count(inst)) free_cluster_edges.push_back(inst);
    std::vector<int> free_core;
    for (int v : ctx.s.core)
        if (!used.contains(v)) free_core.push_back(v);

    std::vector<char> placed(k + 1, 0);
    placed[x] = 1;
    placed[y] = 1;
    for (int lv : x_leaves) placed[lv] = 1;
    std::size_t edge_at = 0, core_at = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < k; ++e) {
            if (emb.edge_map[e] >= 0) continue;
            auto [a, b] = t.edges()[e];
            if (a == x || b == x) continue;  // x's edges are done
            int have = placed[a] ? a : (placed[b] ? b : -1);
            if (have < 0) continue;
            int fresh = (have == a) ? b : a;
            if (placed[fresh]) continue;
            if (edge_at >= free_cluster_edges.size() || core_at >= free_core.size())
                need_larger_uniformity("the core walk");
            emb.edge_map[e] = free_cluster_edges[edge_at++];
            emb.vertex_map[fresh] = free_core[core_at++];
            used.add(emb.vertex_map[fresh]);
            placed[fresh] = 1;
            progress = true;
        }
    }

    if (!verify_embedding(ctx.h, t, emb))
        throw TheoremViolation("span-degree audit produced a non-verifying embedding");
    return emb;
}

}  // namespace

std::optional<BergeEmbedding> audit_cluster(const MultiHypergraph& h, const Tree& t,
                                            const ClusterWitness& s) {
    const int k = t.edge_count();
    if (static_cast<int>(s.edge_indices.size()) != k - 1)
        throw PreconditionError("cluster audit: witness size does not match the tree");
    AuditContext ctx(h, t, s);

    for (int v : s.core)
        if (ctx.degrees[v] >= k) return build_core_embedding(ctx, v);

    if (classify_tree(t).kind != TreeKind::Star) {
        const int threshold = (k + 1) / 2;
        for (int v : s.span) {
            if (ctx.degrees[v] < threshold) continue;
            bool outside = false;
            for (int inst : ctx.incidence[v])
                if (!ctx.cluster_edges.count(inst)) { outside = true; break; }
            if (outside) return build_span_embedding(ctx, v);
        }
    }
    return std::nullopt;
}

StripReport build_strip_report(const MultiHypergraph& h,
                               const std::vector<ClusterWitness>& clusters, int k) {
    StripReport rep;
    rep.k = k;
    rep.n = h.vertex_count();
    rep.r = h.uniformity();
    rep.host_simple = h.is_simple();
    rep.degrees = h.degree_profile();
    rep.clusters = clusters;

    auto incidence = h.vertex_incidence();
    std::set<int> all_span;
    rep.x_parts.clear();
    std::set<int> x_set;
    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        std::set<int> mine(clusters[ci].edge_indices.begin(), clusters[ci].edge_indices.end());
        std::vector<int> part;
        for (int v : clusters[ci].span) {
            all_span.insert(v);
            bool exclusive = true;
            for (int inst : incidence[v])
                if (!mine.count(inst)) { exclusive = false; break; }
            if (exclusive) part.push_back(v);
        }
        if (static_cast<int>(part.size()) == rep.r) ++rep.full_block_count;
        if (static_cast<int>(part.size()) > rep.r) rep.oversized.push_back(static_cast<int>(ci));
        for (int v : part) x_set.insert(v);
        rep.x_parts.push_back(std::move(part));
    }
    rep.x_all.assign(x_set.begin(), x_set.end());
    rep.y_all.clear();
    for (int v : all_span)
        if (!x_set.count(v)) rep.y_all.push_back(v);
    rep.degree_sum_x = 0;
    for (int v : rep.x_all) rep.degree_sum_x += rep.degrees[v];
    rep.degree_sum_y = 0;
    for (int v : rep.y_all) rep.degree_sum_y += rep.degrees[v];
    return rep;
}

std::variant<StripResult, BergeEmbedding> strip_clusters(const MultiHypergraph& h, const Tree& t) {
    if (classify_tree(t).kind == TreeKind::Star)
        throw PreconditionError("strip: the span-degree audit is vacuous for stars");
    const int k = t.edge_count();
    auto clusters = find_clusters(h, k);
    for (const auto& s : clusters)
        if (auto emb = audit_cluster(h, t, s)) return *emb;

    StripReport rep = build_strip_report(h, clusters, k);

    std::set<int> removed(rep.x_all.begin(), rep.x_all.end());
    removed.insert(rep.y_all.begin(), rep.y_all.end());
    std::vector<int> keep;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!removed.count(v)) keep.push_back(v);
    auto sub = h.induced(keep);
    return StripResult{std::move(sub.hypergraph), std::move(sub.vertex_orig), std::move(rep)};
}

namespace {

void push_line(InequalityAudit& audit, std::string name, Rational lhs, Rational rhs) {
    InequalityLine line{std::move(name), lhs, rhs, lhs <= rhs, lhs == rhs};
    audit.ok = audit.ok && line.holds;
    audit.lines.push_back(std::move(line));
}

}  // namespace

InequalityAudit audit_strip_inequalities(const StripReport& rep, int n, int r, int k, Mode mode) {
    if (rep.r != r || rep.k != k || rep.n != n)
        throw PreconditionError("inequality audit: parameters do not match the report");
    InequalityAudit audit;

    if (mode == Mode::Multi) {
        long long t = rep.t();
        long long x = static_cast<long long>(rep.x_all.size());
        long long y = static_cast<long long>(rep.y_all.size());
        long long sx = rep.degree_sum_x, sy = rep.degree_sum_y;
        audit.y_empty = (y == 0);
        audit.x_equals_tr = (x == t * r);
        audit.full_block_count = rep.full_block_count;
        push_line(audit, "x-degree-sum <= |X|(k-1)", sx, x * (k - 1));
        push_line(audit, "x-degree-sum <= t*r*(k-1)", sx, t * r * (k - 1));
        push_line(audit, "y-degree-sum <= |Y|(k-1)/2", sy, Rational(y * (k - 1), 2));
        push_line(audit, "removed-incidences <= d-bound * removed-vertices", sx + sy,
                  Rational(static_cast<long long>(r) * (k - 1), r + k - 1) *
                      Rational(x + t * (k - 1) + y));
        return audit;
    }

    if (!rep.host_simple)
        throw PreconditionError("inequality audit: the per-block degree caps assume a simple host");

    // Clusters whose exclusive vertex class exceeds r are exactly the ones
    // the induction step deletes as a low-incidence set; the displayed chain
    // is stated for the others.
    std::set<int> skip(rep.oversized.begin(), rep.oversized.end());
    long long t = 0, a = 0;
    std::set<int> x_set, span_set;
    for (std::size_t ci = 0; ci < rep.clusters.size(); ++ci) {
        if (skip.count(static_cast<int>(ci))) continue;
        ++t;
        if (static_cast<int>(rep.x_parts[ci].size()) == r) ++a;
        for (int v : rep.x_parts[ci]) x_set.insert(v);
        for (int v : rep.clusters[ci].span) span_set.insert(v);
    }
    long long sx = 0, sy = 0;
    long long x = static_cast<long long>(x_set.size());
    long long y = 0;
    for (int v : x_set) sx += rep.degrees[v];
    for (int v : span_set)
        if (!x_set.count(v)) { ++y; sy += rep.degrees[v]; }

    audit.y_empty = (y == 0);
    audit.x_equals_tr = (x == t * r);
    audit.full_block_count = static_cast<int>(a);

    push_line(audit, "cluster-incidences >= t*r*(k-1)  [as lhs<=rhs]", t * r * (k - 1), sx + sy);
    push_line(audit, "x-degree-sum <= t(r-1)(k-1)+a", sx, t * (r - 1) * (k - 1) + a);
    push_line(audit, "x-degree-sum <= |X|(k-1)-a(k-2)", sx, x * (k - 1) - a * (k - 2));
    push_line(audit, "removed-degree-sum <= t(r-1)(k-1)+a+|Y|(k-1)/2", sx + sy,
              Rational(t * (r - 1) * (k - 1) + a) + Rational(y * (k - 1), 2));
    push_line(audit, "t(k-1) <= a+|Y|(k-1)/2", t * (k - 1), Rational(a) + Rational(y * (k - 1), 2));
    push_line(audit, "r * x-degree-sum <= |X|r(k-1)-ar(k-2)", Rational(sx) * Rational(r),
              Rational(x) * r * (k - 1) - Rational(a) * r * (k - 2));
    push_line(audit, "k * x-degree-sum <= t(r-1)k(k-1)+ak", Rational(sx) * Rational(k),
              Rational(t * (r - 1) * (k - 1)) * Rational(k) + Rational(a) * Rational(k));
    push_line(audit, "(k+r) * y-degree-sum <= |Y|(k-1)(k+r)/2", Rational(sy) * Rational(k + r),
              Rational(y * (k - 1), 2) * Rational(k + r));
    push_line(audit, "removed-incidences <= d-bound * removed-vertices", sx + sy,
              Rational(static_cast<long long>(r) * (k - 1), r + k) * Rational(x + t * (k - 1) + y));
    return audit;
}

} // namespace berge
