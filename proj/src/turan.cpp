#include "berge/turan.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <functional>

#include "berge/berge_search.hpp"
#include "berge/canonical.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/reduction.hpp"
#include "berge/tree_enum.hpp"

namespace berge {

namespace {

long long choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (long long i = 0; i < k; ++i) {
        out = out * (n - i) / (i + 1);
        if (out > (1LL << 40)) return out;  // far beyond any guard
    }
    return out;
}

void check_deadline(const TuranOptions& opt) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
        throw GuardExceeded("search budget exhausted");
}

}  // namespace

Rational bound(long long n, int r, int k, BoundKind which) {
    if (n < 0 || r < 1 || k < 1) throw PreconditionError("bound: bad parameters");
    switch (which) {
        case BoundKind::Simple:
            if (r < k * (k - 2))
                throw PreconditionError("bound(simple): requires r >= k(k-2), violated: " +
                                        std::to_string(r) + " < " + std::to_string(k * (k - 2)));
            return Rational(n * (k - 1), r + 1);
        case BoundKind::Multi:
            if (r < (k - 1) * (k - 2))
                throw PreconditionError("bound(multi): requires r >= (k-1)(k-2), violated: " +
                                        std::to_string(r) + " < " +
                                        std::to_string((k - 1) * (k - 2)));
            return Rational(n * (k - 1), r);
        case BoundKind::PathLong:
            if (!(k > r + 1))
                throw PreconditionError("bound(path-long): requires k > r+1, violated: " +
                                        std::to_string(k) + " <= " + std::to_string(r + 1));
            if (!(r + 1 > 3))
                throw PreconditionError("bound(path-long): requires r+1 > 3, violated: " +
                                        std::to_string(r + 1) + " <= 3");
            return Rational(n, k) * Rational(choose(k, r));
        case BoundKind::PathShort:
            if (!(r >= k))
                throw PreconditionError("bound(path-short): requires r >= k, violated: " +
                                        std::to_string(r) + " < " + std::to_string(k));
            if (!(k > 2))
                throw PreconditionError("bound(path-short): requires k > 2, violated: " +
                                        std::to_string(k) + " <= 2");
            return Rational(n * (k - 1), r + 1);
    }
    throw PreconditionError("bound: unknown kind");
}

namespace {

std::vector<std::vector<int>> candidate_edges(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == r) {
            out.push_back(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

struct SearchShared {
    std::atomic<long long> best{0};
    std::mutex pool_mutex;
    std::vector<std::vector<std::vector<int>>> pool;  // edge lists with count == best-at-record
};

struct TuranSearch {
    int n, r, k, cap;
    const Tree& tree;
    const TuranOptions& opt;
    const std::vector<std::vector<int>>& cands;
    SearchShared& shared;

    bool contains_copy(const std::vector<std::vector<int>>& edges) const {
        MultiHypergraph h(n, r, edges);
        return find_berge_copy(h, tree).has_value();
    }

    void record(const std::vector<std::vector<int>>& edges) {
        long long count = static_cast<long long>(edges.size());
        long long prev = shared.best.load();
        while (count > prev && !shared.best.compare_exchange_weak(prev, count)) {}
        if (opt.collect_extremal && count >= shared.best.load()) {
            std::lock_guard<std::mutex> lock(shared.pool_mutex);
            shared.pool.push_back(edges);
        }
    }

    // DFS over candidate indices; each index contributes multiplicity
    // 0..cap, copy-freeness checked one instance at a time.
    void dfs(std::size_t idx, std::vector<std::vector<int>>& edges, bool included_any) {
        check_deadline(opt);
        if (idx == cands.size()) {
            record(edges);
            return;
        }
        long long upper = static_cast<long long>(edges.size()) +
                          static_cast<long long>(cap) * (cands.size() - idx);
        long long best = shared.best.load();
        if (opt.collect_extremal ? upper < best : upper <= best) return;

        bool may_include = included_any || !opt.symmetry || idx == 0;
        if (may_include) {
            int feasible = 0;
            for (int m = 1; m <= cap; ++m) {
                edges.push_back(cands[idx]);
                if (contains_copy(edges)) {
                    edges.pop_back();
                    break;
                }
                feasible = m;
            }
            for (int m = feasible; m >= 1; --m) {
                dfs(idx + 1, edges, true);
                edges.pop_back();
            }
        }
        dfs(idx + 1, edges, included_any);
    }
};

std::vector<MultiHypergraph> dedupe_canonical(int n, int r,
                                              const std::vector<std::vector<std::vector<int>>>& pool,
                                              long long value) {
    std::map<std::string, MultiHypergraph> classes;
    for (const auto& edges : pool) {
        if (static_cast<long long>(edges.size()) != value) continue;
        MultiHypergraph h(n, r, edges);
        MultiHypergraph canon = canonical_form(h);
        classes.emplace(canon.serialize(), std::move(canon));
    }
    std::vector<MultiHypergraph> out;
    for (auto& [key, h] : classes) out.push_back(std::move(h));
    return out;
}

}  // namespace

TuranResult brute_force_turan(long long n, int r, int k, const Tree& t, Mode mode,
                              const TuranOptions& opt) {
    if (t.edge_count() != k)
        throw PreconditionError("oracle: tree edge count does not match k");
    if (n > opt.max_n)
        throw GuardExceeded("oracle guard: n exceeds " + std::to_string(opt.max_n));
    if (choose(n, r) > opt.max_candidates)
        throw GuardExceeded("oracle guard: candidate count exceeds " +
                            std::to_string(opt.max_candidates));

    TuranResult res;
    res.n = n;
    res.r = r;
    res.k = k;
    res.mode = mode;

    const int ni = static_cast<int>(n);
    auto cands = candidate_edges(ni, r);
    if (cands.empty()) {
        res.value = 0;
        if (opt.collect_extremal) {
            res.extremal.push_back(MultiHypergraph(ni, r, {}));
            res.extremal_class_count = 1;
        }
        return res;
    }

    if (mode == Mode::Multi) {
        // a copy occupies at most k instances of any single set, so the
        // complete multiplicity-k host absorbs every free multi-host
        std::vector<std::vector<int>> all;
        for (const auto& c : cands)
            for (int copy = 0; copy < k; ++copy) all.push_back(c);
        MultiHypergraph complete(ni, r, std::move(all));
        if (!find_berge_copy(complete, t)) {
            res.infinite = true;
            return res;
        }
    }

    const int cap = (mode == Mode::Multi) ? k - 1 : 1;
    SearchShared shared;
    TuranSearch search{ni, r, k, cap, t, opt, cands, shared};

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || cands.size() < 4) {
        std::vector<std::vector<int>> edges;
        search.dfs(0, edges, false);
    } else {
        // split on the multiplicity of the first few candidates; each task
        // finishes its subtree with the shared best for pruning
        struct Frontier {
            std::vector<std::vector<int>> edges;
            std::size_t idx;
            bool included_any;
        };
        std::vector<Frontier> tasks;
        std::function<void(std::size_t, std::vector<std::vector<int>>&, bool, int)> split =
            [&](std::size_t idx, std::vector<std::vector<int>>& edges, bool included_any,
                int depth) {
                if (depth == 0 || idx == cands.size()) {
                    tasks.push_back(Frontier{edges, idx, included_any});
                    return;
                }
                bool may_include = included_any || !opt.symmetry || idx == 0;
                if (may_include) {
                    int feasible = 0;
                    for (int m = 1; m <= cap; ++m) {
                        edges.push_back(cands[idx]);
                        if (search.contains_copy(edges)) {
                            edges.pop_back();
                            break;
                        }
                        feasible = m;
                    }
                    for (int m = feasible; m >= 1; --m) {
                        split(idx + 1, edges, true, depth - 1);
                        edges.pop_back();
                    }
                }
                split(idx + 1, edges, included_any, depth - 1);
            };
        std::vector<std::vector<int>> seed;
        int depth = 1;
        while (depth < 8 && (1 << depth) < 4 * jobs) ++depth;
        split(0, seed, false, depth);
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    std::size_t mine = next.fetch_add(1);
                    if (mine >= tasks.size()) return;
                    auto local = tasks[mine].edges;
                    search.dfs(tasks[mine].idx, local, tasks[mine].included_any);
                }
            }));
        for (auto& w : workers) w.get();
    }

    res.value = shared.best.load();
    if (opt.collect_extremal) {
        res.extremal = dedupe_canonical(ni, r, shared.pool, res.value);
        res.extremal_class_count = static_cast<long long>(res.extremal.size());
    }
    return res;
}

ExtremalReport verify_extremal(long long n, int r, int k, const Tree& t, Mode mode,
                               const TuranOptions& opt) {
    TuranOptions o = opt;
    o.collect_extremal = true;
    ExtremalReport rep;
    rep.result = brute_force_turan(n, r, k, t, mode, o);
    if (rep.result.infinite) {
        rep.characterization_supported = false;
        return rep;
    }
    const bool star = classify_tree(t).kind == TreeKind::Star;
    if (star && mode == Mode::Simple) {
        rep.characterization_supported = false;  // no published shape to check
        return rep;
    }
    for (const auto& h : rep.result.extremal) {
        bool match = false;
        if (star) {
            auto deg = h.degree_profile();
            match = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k - 1; });
        } else {
            match = validate_certificate(h, t, mode).has_value();
        }
        if (match) ++rep.matched;
        else rep.outliers.push_back(h);
    }
    return rep;
}

ProbeReport probe_conjecture(long long n, int r, int k, const TuranOptions& opt) {
    ProbeReport rep;
    rep.n = n;
    rep.r = r;
    rep.k = k;
    if (r < k + 1) rep.regime = "regression";
    else if (r >= (k - 1) * (k - 2)) rep.regime = "theorem";
    else rep.regime = "open";

    const Rational formula(n * (k - 1), r);
    TuranOptions o = opt;
    o.collect_extremal = true;
    rep.confirmed = true;
    const bool regression_blocks = rep.regime == "regression" && n % r == 0 && k >= 2;
    std::optional<MultiHypergraph> blocks;
    std::map<std::vector<int>, int> blocks_mult;
    if (regression_blocks) {
        blocks = multi_blocks(static_cast<int>(n), r, k);
        for (const auto& e : blocks->edges()) ++blocks_mult[e];
    }
    for (const auto& tree : enumerate_trees(k)) {
        ProbeTreeLine line(tree);
        line.kind = tree_kind_name(classify_tree(tree).kind);
        line.formula = formula;
        line.result = brute_force_turan(n, r, k, tree, Mode::Multi, o);
        if (line.result.infinite) {
            // predicted exactly when no candidate set can hold all k+1 tree
            // vertices, i.e. n < k+1 at any r, or r <= k with every edge short
            line.within_formula = (n < k + 1) || (r <= k);
        } else {
            line.within_formula = Rational(line.result.value) <= formula;
            line.equality = Rational(line.result.value) == formula;
            if (line.equality) {
                line.extremal_blocks = true;
                for (const auto& h : line.result.extremal)
                    if (!validate_certificate(h, tree, Mode::Multi)) line.extremal_blocks = false;
            }
        }
        bool tree_ok = line.within_formula;
        if (line.equality && classify_tree(tree).kind != TreeKind::Star)
            tree_ok = tree_ok && (n % r == 0) && line.extremal_blocks;
        if (!tree_ok && !rep.counterexample) {
            if (!line.result.extremal.empty())
                rep.counterexample = line.result.extremal.front().serialize();
            else
                rep.counterexample = std::string("value ") + std::to_string(line.result.value) +
                                     " exceeds " + formula.str();
        }
        rep.confirmed = rep.confirmed && tree_ok;

        if (regression_blocks) {
            line.blocks_family_free = !find_berge_copy(*blocks, tree).has_value();
            bool forces = true;
            for (const auto& cand : candidate_edges(static_cast<int>(n), r)) {
                auto it = blocks_mult.find(cand);
                if (it != blocks_mult.end() && it->second >= k - 1) continue;
                auto extended = blocks->with_edge(cand);
                if (!find_berge_copy(extended.hypergraph, tree)) forces = false;
            }
            line.blocks_extension_forces = forces;
        }
        rep.trees.push_back(std::move(line));
    }
    return rep;
}

} // namespace berge
