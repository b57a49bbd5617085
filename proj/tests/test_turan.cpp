#include <doctest.h>

#include "berge/berge_search.hpp"
#include "berge/canonical.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/reduction.hpp"
#include "berge/tree_enum.hpp"
#include "berge/turan.hpp"

using namespace berge;

namespace {
const Tree kPath3(3, {{0, 1}, {1, 2}, {2, 3}});
const Tree kPath4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("bound formulas") {
    CHECK(bound(9, 8, 4, BoundKind::Simple) == Rational(3));
    CHECK(bound(8, 3, 3, BoundKind::Simple) == Rational(4));
    CHECK(bound(6, 3, 3, BoundKind::Multi) == Rational(4));
    CHECK(bound(9, 8, 4, BoundKind::Multi) == Rational(27, 8));
    CHECK(bound(12, 5, 4, BoundKind::PathShort) == Rational(6));
    CHECK(bound(12, 3, 6, BoundKind::PathLong) == Rational(40));  // (12/6)*C(6,3)
}

TEST_CASE("bound regime guards") {
    CHECK_THROWS_AS(bound(9, 7, 4, BoundKind::Simple), PreconditionError);   // r < k(k-2)
    CHECK_THROWS_AS(bound(9, 5, 4, BoundKind::Multi), PreconditionError);    // r < (k-1)(k-2)
    CHECK_THROWS_AS(bound(10, 5, 4, BoundKind::PathLong), PreconditionError);
    CHECK_THROWS_AS(bound(10, 2, 2, BoundKind::PathShort), PreconditionError);
    CHECK_THROWS_AS(bound(10, 2, 3, BoundKind::PathLong), PreconditionError);  // r+1 = 3
}

TEST_CASE("oracle values") {
    SUBCASE("simple path instances") {
        auto res = brute_force_turan(4, 3, 3, kPath3, Mode::Simple);
        CHECK(res.value == 2);
        CHECK(brute_force_turan(9, 8, 4, kPath4, Mode::Simple).value == 3);
    }
    SUBCASE("multi instances") {
        CHECK(brute_force_turan(6, 3, 3, kPath3, Mode::Multi).value == 4);
        CHECK(brute_force_turan(3, 3, 3, kPath3, Mode::Multi).infinite);
    }
    SUBCASE("no candidates at r > n") {
        auto res = brute_force_turan(2, 3, 3, kPath3, Mode::Multi);
        CHECK_FALSE(res.infinite);
        CHECK(res.value == 0);
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(brute_force_turan(11, 3, 3, kPath3, Mode::Simple), GuardExceeded);
        CHECK_THROWS_AS(brute_force_turan(10, 5, 3, kPath3, Mode::Simple), GuardExceeded);
        TuranOptions opt;
        opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
        CHECK_THROWS_AS(brute_force_turan(8, 3, 3, kPath3, Mode::Simple, opt), GuardExceeded);
    }
}

TEST_CASE("extremal collection") {
    TuranOptions opt;
    opt.collect_extremal = true;
    SUBCASE("two triples in a 4-set") {
        auto res = brute_force_turan(4, 3, 3, kPath3, Mode::Simple, opt);
        CHECK(res.value == 2);
        CHECK(res.extremal_class_count == 1);
        auto cert = validate_certificate(res.extremal[0], kPath3, Mode::Simple);
        CHECK(cert.has_value());
    }
    SUBCASE("multiplicity blocks at the multi bound") {
        auto res = brute_force_turan(6, 3, 3, kPath3, Mode::Multi, opt);
        CHECK(res.value == 4);
        CHECK(res.extremal_class_count == 1);
        CHECK(validate_certificate(res.extremal[0], kPath3, Mode::Multi).has_value());
    }
    SUBCASE("extremal hosts re-verify as copy-free") {
        auto res = brute_force_turan(8, 3, 3, kPath3, Mode::Simple, opt);
        CHECK(res.value == 4);
        for (const auto& h : res.extremal) CHECK_FALSE(find_berge_copy(h, kPath3).has_value());
    }
}

TEST_CASE("verify_extremal characterizations") {
    SUBCASE("multi path extremals are multiplicity blocks") {
        auto rep = verify_extremal(6, 3, 3, kPath3, Mode::Multi);
        CHECK(rep.characterization_supported);
        CHECK(rep.outliers.empty());
        CHECK(rep.matched == rep.result.extremal_class_count);
    }
    SUBCASE("simple path extremals are clique blocks") {
        auto rep = verify_extremal(4, 3, 3, kPath3, Mode::Simple);
        CHECK(rep.outliers.empty());
        auto rep2 = verify_extremal(8, 3, 3, kPath3, Mode::Simple);
        CHECK(rep2.outliers.empty());
    }
    SUBCASE("multi star extremals are (k-1)-regular") {
        auto rep = verify_extremal(6, 3, 3, make_tree(TreeKind::Star, 3), Mode::Multi);
        CHECK(rep.characterization_supported);
        CHECK(rep.result.value == 4);
        CHECK(rep.outliers.empty());
    }
    SUBCASE("no published shape for simple stars") {
        auto rep = verify_extremal(4, 3, 3, make_tree(TreeKind::Star, 3), Mode::Simple);
        CHECK_FALSE(rep.characterization_supported);
    }
}

TEST_CASE("oracle stays within the formula in regime") {
    struct Row { long long n; int r, k; BoundKind kind; Mode mode; };
    for (const auto& row : {Row{4, 3, 3, BoundKind::Simple, Mode::Simple},
                            Row{5, 3, 3, BoundKind::Simple, Mode::Simple},
                            Row{8, 3, 3, BoundKind::Simple, Mode::Simple},
                            Row{9, 8, 4, BoundKind::Simple, Mode::Simple},
                            Row{10, 8, 4, BoundKind::Simple, Mode::Simple},
                            Row{6, 3, 3, BoundKind::Multi, Mode::Multi},
                            Row{7, 3, 3, BoundKind::Multi, Mode::Multi}}) {
        for (const auto& t : enumerate_trees(row.k)) {
            if (classify_tree(t).kind == TreeKind::Star && row.mode == Mode::Simple) continue;
            auto res = brute_force_turan(row.n, row.r, row.k, t, row.mode);
            REQUIRE_FALSE(res.infinite);
            CHECK(Rational(res.value) <= bound(row.n, row.r, row.k, row.kind));
            // equality only under the divisibility condition
            int divisor = row.kind == BoundKind::Simple ? row.r + 1 : row.r;
            if (Rational(res.value) == bound(row.n, row.r, row.k, row.kind))
                CHECK(row.n % divisor == 0);
        }
    }
}

TEST_CASE("value is monotone under padding with isolated vertices") {
    for (const auto& t : enumerate_trees(3)) {
        auto a = brute_force_turan(5, 4, 3, t, Mode::Multi);
        auto b = brute_force_turan(6, 4, 3, t, Mode::Multi);
        REQUIRE_FALSE(a.infinite);
        REQUIRE_FALSE(b.infinite);
        CHECK(a.value <= b.value);
    }
    auto a = brute_force_turan(4, 3, 3, kPath3, Mode::Simple);
    auto b = brute_force_turan(5, 3, 3, kPath3, Mode::Simple);
    CHECK(a.value <= b.value);
}

TEST_CASE("symmetry reduction does not change values") {
    TuranOptions plain;
    plain.symmetry = false;
    TuranOptions reduced;
    for (const auto& t : enumerate_trees(3)) {
        CHECK(brute_force_turan(5, 3, 3, t, Mode::Simple, plain).value ==
              brute_force_turan(5, 3, 3, t, Mode::Simple, reduced).value);
        CHECK(brute_force_turan(6, 3, 3, t, Mode::Simple, plain).value ==
              brute_force_turan(6, 3, 3, t, Mode::Simple, reduced).value);
        CHECK(brute_force_turan(4, 3, 3, t, Mode::Multi, plain).value ==
              brute_force_turan(4, 3, 3, t, Mode::Multi, reduced).value);
    }
}

TEST_CASE("parallel search matches sequential") {
    TuranOptions par;
    par.jobs = 4;
    par.collect_extremal = true;
    TuranOptions seq;
    seq.collect_extremal = true;
    auto a = brute_force_turan(8, 3, 3, kPath3, Mode::Simple, par);
    auto b = brute_force_turan(8, 3, 3, kPath3, Mode::Simple, seq);
    CHECK(a.value == b.value);
    CHECK(a.extremal_class_count == b.extremal_class_count);
}

TEST_CASE("canonical forms identify isomorphic hosts") {
    auto a = MultiHypergraph::parse("5 3\n0 1 2\n2 3 4\n");
    auto b = MultiHypergraph::parse("5 3\n1 2 4\n0 3 4\n");  // relabeled copy
    auto c = MultiHypergraph::parse("5 3\n0 1 2\n1 2 3\n");  // overlapping pair
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, c));
    CHECK(canonical_key(a) == canonical_key(b));
    // multiplicities are part of the class
    auto d = MultiHypergraph::parse("4 3\n0 1 2\n0 1 2\n");
    auto e = MultiHypergraph::parse("4 3\n1 2 3\n1 2 3\n");
    auto f = MultiHypergraph::parse("4 3\n0 1 2\n0 1 3\n");
    CHECK(isomorphic(d, e));
    CHECK_FALSE(isomorphic(d, f));
}

TEST_CASE("conjecture probe") {
    SUBCASE("the open-regime instance confirms") {
        auto rep = probe_conjecture(5, 5, 4);
        CHECK(rep.regime == "open");
        CHECK(rep.confirmed);
        for (const auto& line : rep.trees) {
            REQUIRE_FALSE(line.result.infinite);
            CHECK(line.result.value == 3);
            if (line.kind != "star") {
                CHECK(line.equality);
                CHECK(line.extremal_blocks);
            }
        }
    }
    SUBCASE("the multigraph regression reproduces the block-family facts") {
        auto rep = probe_conjecture(4, 2, 3);
        CHECK(rep.regime == "regression");
        CHECK(Rational(4) == Rational(rep.n * (rep.k - 1), rep.r));
        bool saw_path = false;
        for (const auto& line : rep.trees) {
            if (line.kind != "path") continue;
            saw_path = true;
            REQUIRE(line.blocks_family_free.has_value());
            CHECK(*line.blocks_family_free);
            REQUIRE(line.blocks_extension_forces.has_value());
            CHECK(*line.blocks_extension_forces);
        }
        CHECK(saw_path);
    }
}
