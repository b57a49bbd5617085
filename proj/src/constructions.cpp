#include "berge/constructions.hpp"

#include <algorithm>

#include "berge/errors.hpp"

namespace berge {

MultiHypergraph disjoint_cliques(int n, int r, int k) {
    if (k < 2) throw PreconditionError("disjoint_cliques: k >= 2 required");
    if (r < 1) throw PreconditionError("disjoint_cliques: r >= 1 required");
    if (n % (r + 1) != 0)
        throw PreconditionError("disjoint_cliques: (r+1) must divide n");
    if (k - 1 > r + 1)
        throw PreconditionError("disjoint_cliques: a group of r+1 vertices has only r+1 distinct r-subsets");
    std::vector<std::vector<int>> edges;
    const int groups = n / (r + 1);
    for (int g = 0; g < groups; ++g) {
        int base = g * (r + 1);
        // the lex-first r-subsets of a (r+1)-set drop its largest elements
        for (int drop = 0; drop < k - 1; ++drop) {
            std::vector<int> e;
            for (int i = 0; i <= r; ++i)
                if (i != r - drop) e.push_back(base + i);
            edges.push_back(std::move(e));
        }
    }
    return MultiHypergraph(n, r, std::move(edges));
}

MultiHypergraph multi_blocks(int n, int r, int k) {
    if (k < 2) throw PreconditionError("multi_blocks: k >= 2 required");
    if (r < 1) throw PreconditionError("multi_blocks: r >= 1 required");
    if (n % r != 0) throw PreconditionError("multi_blocks: r must divide n");
    std::vector<std::vector<int>> edges;
    for (int g = 0; g < n / r; ++g) {
        std::vector<int> e;
        for (int i = 0; i < r; ++i) e.push_back(g * r + i);
        for (int copy = 0; copy < k - 1; ++copy) edges.push_back(e);
    }
    return MultiHypergraph(n, r, std::move(edges));
}

MultiHypergraph two_sided(int t, int r, int k,
                          const std::optional<std::vector<std::vector<int>>>& adjacency) {
    if (k % 2 == 0) throw PreconditionError("two_sided: k must be odd");
    if (k < 3) throw PreconditionError("two_sided: k >= 3 required");
    if (r < k * (k - 2)) throw PreconditionError("two_sided: r >= k(k-2) required");
    if (2 * t < k - 1)
        throw PreconditionError("two_sided: block degree k-1 needs k-1 distinct singletons, only 2t exist");

    const int singles = 2 * t;
    const int block_degree = k - 1;
    const int single_degree = (k - 1) / 2;

    std::vector<std::vector<int>> bip(t);  // block -> singleton indices
    if (adjacency) {
        bip = *adjacency;
        if (static_cast<int>(bip.size()) != t)
            throw PreconditionError("two_sided: adjacency must list every block");
        std::vector<int> sdeg(singles, 0);
        for (auto& row : bip) {
            std::sort(row.begin(), row.end());
            if (std::adjacent_find(row.begin(), row.end()) != row.end())
                throw PreconditionError("two_sided: repeated singleton in a block row");
            if (static_cast<int>(row.size()) != block_degree)
                throw PreconditionError("two_sided: block degree must be k-1");
            for (int s : row) {
                if (s < 0 || s >= singles)
                    throw PreconditionError("two_sided: singleton index out of range");
                ++sdeg[s];
            }
        }
        for (int d : sdeg)
            if (d != single_degree)
                throw PreconditionError("two_sided: singleton degree must be (k-1)/2");
    } else {
        // biregular circulant: singleton j meets blocks floor(j/2)+i mod t
        for (int j = 0; j < singles; ++j)
            for (int i = 0; i < single_degree; ++i) bip[(j / 2 + i) % t].push_back(j);
        for (auto& row : bip) std::sort(row.begin(), row.end());
    }

    const int n = t * (r - 1) + singles;
    std::vector<std::vector<int>> edges;
    for (int b = 0; b < t; ++b) {
        std::vector<int> block;
        for (int i = 0; i < r - 1; ++i) block.push_back(b * (r - 1) + i);
        for (int s : bip[b]) {
            std::vector<int> e = block;
            e.push_back(t * (r - 1) + s);
            edges.push_back(std::move(e));
        }
    }
    return MultiHypergraph(n, r, std::move(edges));
}

Tree make_tree(TreeKind kind, int k) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case TreeKind::Path:
            for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
            break;
        case TreeKind::Star:
            for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
            break;
        case TreeKind::BalancedDoubleStar: {
            if (k % 2 == 0 || k < 3)
                throw PreconditionError("balanced double star needs odd k >= 3");
            edges.emplace_back(0, 1);
            int next = 2;
            for (int i = 0; i < (k - 1) / 2; ++i) edges.emplace_back(0, next++);
            for (int i = 0; i < (k - 1) / 2; ++i) edges.emplace_back(1, next++);
            break;
        }
        case TreeKind::Other:
            throw PreconditionError("make_tree: no generator for kind 'other'");
    }
    return Tree(k, std::move(edges)).canonical_relabel();
}

} // namespace berge
