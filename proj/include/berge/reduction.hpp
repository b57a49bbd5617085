#ifndef BERGE_REDUCTION_HPP
#define BERGE_REDUCTION_HPP

#include <string>
#include <variant>
#include <vector>

#include "berge/clusters.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/tree.hpp"

namespace berge {

// Sub-structure whose edges are subsets of pairwise distinct host instances
// (their correspondents).  The pipeline only produces instances where every
// vertex degree and every edge size is at least k-1.
struct ReducedSubhypergraph {
    std::vector<int> vertices;               // host vertex ids, ascending
    std::vector<std::vector<int>> edges;     // reduced edges, host ids, sorted
    std::vector<int> correspondent;          // reduced edge -> host instance
};

// Builds the reduced structure from a peeled induced subgraph of the
// incidence graph: the surviving left side becomes the vertex set, every
// surviving right vertex contributes its host edge intersected with it.
// min_degree is the k-1 requirement that the peel guarantees.
ReducedSubhypergraph reduced_from_bipartite(const MultiHypergraph& h,
                                            const Graph::Induced& peeled_incidence,
                                            int left_count, int min_degree);

// The dichotomy at the bottom of the pipeline: either every vertex of the
// first reduced edge shares one incidence set, which yields a cluster whose
// correspondents form a cluster in the host, or a divergence witness exists
// and the tree embeds constructively along its prefix order.  Requires host
// edges of size >= k+1, the reduced invariants, and a non-star tree.
std::variant<ClusterWitness, BergeEmbedding> cluster_or_embed(const MultiHypergraph& h,
                                                              const ReducedSubhypergraph& red,
                                                              const Tree& t);

// Extremal-shape certificate: a disjoint decomposition of the host into the
// permitted component kinds, with nothing left over.
struct CertComponent {
    enum class Kind { CliqueBlock, MultiBlock, TwoSided };
    Kind kind;
    std::vector<int> vertices;
    std::vector<int> edge_indices;
    // two-sided extras
    std::vector<std::vector<int>> blocks;
    std::vector<int> singles;
};

struct StructureCertificate {
    std::vector<CertComponent> components;
};

// Checks whether the host is exactly a disjoint union of the extremal
// components for the given mode: multiplicity-(k-1) blocks (multi), or
// (r+1)-sets carrying k-1 edges plus, only when the tree is the balanced
// double star, biregular two-sided components (simple).  Isolated vertices
// disqualify.  Nothing is returned otherwise.
std::optional<StructureCertificate> validate_certificate(const MultiHypergraph& h, const Tree& t,
                                                         Mode mode);

struct ProveOutcome {
    std::variant<BergeEmbedding, StructureCertificate> result;
    std::vector<std::string> trace;

    bool embedded() const { return std::holds_alternative<BergeEmbedding>(result); }
    const BergeEmbedding& embedding() const { return std::get<BergeEmbedding>(result); }
    const StructureCertificate& certificate() const { return std::get<StructureCertificate>(result); }
};

// Drives the whole pipeline for a host at or above the density bound:
// low-incidence (r+1)-set removal with recursion (simple mode), cluster
// audits with constructive embeddings, average-safe stripping, peeling to a
// reduced structure and the cluster-or-embed dichotomy.  Returns a verified
// embedding whenever e(H) exceeds the bound and a validated structure
// certificate exactly at equality on an extremal host.  A generic search
// fallback realizes the contradiction branch and is tagged in the trace.
// Throws TheoremViolation if no branch succeeds.
ProveOutcome prove_or_embed(const MultiHypergraph& h, const Tree& t, Mode mode);

} // namespace berge

#endif
