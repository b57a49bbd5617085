#ifndef BERGE_TURAN_HPP
#define BERGE_TURAN_HPP

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/clusters.hpp"  // Mode
#include "berge/hypergraph.hpp"
#include "berge/rational.hpp"
#include "berge/tree.hpp"

namespace berge {

enum class BoundKind { Simple, Multi, PathLong, PathShort };

// Exact rational value of the density bound for the requested regime:
//   Simple     r >= k(k-2)       ->  n(k-1)/(r+1)
//   Multi      r >= (k-1)(k-2)   ->  n(k-1)/r
//   PathLong   k > r+1 > 3       ->  (n/k) * C(k,r)
//   PathShort  r >= k > 2        ->  n(k-1)/(r+1)
// A regime violation names the failed inequality.
Rational bound(long long n, int r, int k, BoundKind which);

struct TuranOptions {
    int max_n = 10;
    long long max_candidates = 60;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    int jobs = 1;
    bool collect_extremal = false;
    bool symmetry = true;  // pin the first included edge to the lex-least r-set
};

struct TuranResult {
    long long n = 0;
    int r = 0, k = 0;
    Mode mode = Mode::Simple;
    bool infinite = false;
    long long value = 0;
    long long extremal_class_count = 0;       // filled when collect_extremal
    std::vector<MultiHypergraph> extremal;    // canonical representatives, sorted
};

// Exhaustive maximum over copy-free hosts: subsets of the candidate r-sets
// in simple mode, multiplicity vectors capped at k-1 per set in multi mode
// (k instances of one set swallow any k-edge tree once r >= k+1, so higher
// multiplicity never helps a free host there; the same cap below r = k+1
// pins the finite value the bound formulas describe — see the probe for the
// regression story).  Infinite is returned, before searching, exactly when
// the complete host with every multiplicity k is itself free: a copy uses
// at most k instances of one set, so that host absorbs every multiplicity
// pattern.
TuranResult brute_force_turan(long long n, int r, int k, const Tree& t, Mode mode,
                              const TuranOptions& opt = {});

struct ExtremalReport {
    TuranResult result;
    bool characterization_supported = true;
    long long matched = 0;
    std::vector<MultiHypergraph> outliers;  // nonempty means falsification alarm
};

// Re-checks every extremal host from the oracle against the published
// shape: clique blocks (simple, non-star), multiplicity blocks (multi,
// non-star; two-sided components admitted for the balanced double star in
// simple mode), (k-1)-regularity (multi, star).
ExtremalReport verify_extremal(long long n, int r, int k, const Tree& t, Mode mode,
                               const TuranOptions& opt = {});

struct ProbeTreeLine {
    explicit ProbeTreeLine(Tree t) : tree(std::move(t)) {}

    Tree tree;
    std::string kind;
    TuranResult result;
    Rational formula{0};
    bool within_formula = false;   // value <= formula (or infinite as predicted)
    bool equality = false;
    bool extremal_blocks = false;  // every extremal host is a multiplicity-block union

    // regression extras (r < k+1, r | n): the block family avoids this tree
    // and every cap-respecting single-instance extension stops doing so
    std::optional<bool> blocks_family_free;
    std::optional<bool> blocks_extension_forces;
};

struct ProbeReport {
    long long n = 0;
    int r = 0, k = 0;
    std::string regime;  // "open", "theorem", or "regression"
    std::vector<ProbeTreeLine> trees;
    bool confirmed = false;  // formula + extremal clause hold for every tree
    std::optional<std::string> counterexample;  // serialized offending host
};

// Compares the oracle against n(k-1)/r and the block characterization for
// every k-edge tree.  Below r = k+1 the formula is outside its regime; the
// probe then reports the local-maximality facts of the block family instead
// of raising an alarm.
ProbeReport probe_conjecture(long long n, int r, int k, const TuranOptions& opt = {});

} // namespace berge

#endif
