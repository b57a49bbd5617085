#ifndef BERGE_CLUSTERS_HPP
#define BERGE_CLUSTERS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/rational.hpp"
#include "berge/tree.hpp"

namespace berge {

// k-1 hyperedge instances whose common intersection (the core) has at least
// k-1 vertices; the span is their union.
struct ClusterWitness {
    std::vector<int> edge_indices;  // ascending instance indices
    std::vector<int> core;          // ascending vertex ids
    std::vector<int> span;          // ascending vertex ids
};

// Greedy maximal family of pairwise edge-disjoint clusters, deterministic:
// seed pairs scanned in ascending index order, grown by the lowest-index
// edge that keeps the running intersection at size >= k-1.  Edge-disjointness
// of *all* clusters is a structural fact only for copy-free hosts, so the
// collector enforces it by construction and the audits check the rest.
std::vector<ClusterWitness> find_clusters(const MultiHypergraph& h, int k);

// Every (k-1)-subset of instances meeting the intersection bound.  Oracle
// duty only; guarded against combinatorial blowup.
std::vector<ClusterWitness> enumerate_clusters_exhaustive(const MultiHypergraph& h, int k,
                                                          long long combination_guard = 2000000);

// Degree audit of one cluster against a copy-free host.
//
// If a core vertex reaches degree k, the returned embedding places the tree
// minus two leaves inside the core, finishes one leaf through the spare
// cluster edge and the other through the core vertex's outside instance.
// If a span vertex with an outside instance reaches degree floor((k+1)/2),
// the embedding anchors the low-degree internal tree vertex there (skipped
// for stars).  No violation returns nothing.
//
// The spare-vertex bookkeeping of both constructions is guaranteed only for
// r >= k+1; below that the construction is attempted and a precondition
// error is raised exactly when it runs out of room.
std::optional<BergeEmbedding> audit_cluster(const MultiHypergraph& h, const Tree& t,
                                            const ClusterWitness& s);

// Bookkeeping of one cluster-removal pass.
struct StripReport {
    int n = 0, r = 0, k = 0;
    bool host_simple = true;
    std::vector<int> degrees;                // full degree profile of the host
    std::vector<ClusterWitness> clusters;    // t = clusters.size()
    std::vector<std::vector<int>> x_parts;   // X_i: vertices incident only with cluster i
    std::vector<int> x_all;                  // X, ascending
    std::vector<int> y_all;                  // span vertices with an outside incidence
    int full_block_count = 0;                // a: parts with |X_i| == r
    std::vector<int> oversized;              // cluster indices with |X_i| > r
    long long degree_sum_x = 0;
    long long degree_sum_y = 0;

    long long t() const { return static_cast<long long>(clusters.size()); }
};

struct StripResult {
    MultiHypergraph remainder;  // host minus cluster edges and X∪Y vertices
    std::vector<int> vertex_map;  // remainder id -> host id
    StripReport report;
};

// Removes the greedy cluster family plus the X and Y vertex classes
// (vertex removal drops incident edges, keeping the remainder uniform).
// If any cluster fails its audit the embedding is surfaced instead, since a
// strip of a host that already contains a copy is meaningless.
std::variant<StripResult, BergeEmbedding> strip_clusters(const MultiHypergraph& h, const Tree& t);

// The bookkeeping alone, for a caller that manages its own cluster family.
StripReport build_strip_report(const MultiHypergraph& h,
                               const std::vector<ClusterWitness>& clusters, int k);

enum class Mode { Simple, Multi };

struct InequalityLine {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool tight = false;
};

struct InequalityAudit {
    bool ok = true;
    std::vector<InequalityLine> lines;
    bool y_empty = true;
    bool x_equals_tr = false;     // multi-side tightness marker
    int full_block_count = 0;     // a, over the audited clusters
};

// Checks the removal-pass inequality chain with exact integers/rationals
// and records which lines are tight.  The multi chain takes every cluster;
// the simple chain takes only clusters with |X_i| <= r — a larger block is
// a low-incidence vertex set that the induction step removes wholesale, so
// the per-block degree caps are not stated for it.
InequalityAudit audit_strip_inequalities(const StripReport& report, int n, int r, int k, Mode mode);

} // namespace berge

#endif
