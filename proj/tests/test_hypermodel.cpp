#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "oracles.hpp"

using namespace berge;

TEST_CASE("hypergraph parsing") {
    SUBCASE("plain two-edge file") {
        auto h = MultiHypergraph::parse("4 3\n0 1 2\n0 1 3\n");
        CHECK(h.vertex_count() == 4);
        CHECK(h.uniformity() == 3);
        CHECK(h.edge_count() == 2);
    }
    SUBCASE("repetition is multiplicity") {
        auto h = MultiHypergraph::parse("3 3\n0 1 2\n0 1 2\n");
        CHECK(h.edge_count() == 2);
        CHECK(h.edge(0) == h.edge(1));
        CHECK_FALSE(h.is_simple());
    }
    SUBCASE("comments and blank lines") {
        auto h = MultiHypergraph::parse("# a comment\n\n4 3\n# another\n2 1 0\n");
        CHECK(h.edge(0) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("duplicate vertex in an edge") {
        CHECK_THROWS_AS(MultiHypergraph::parse("4 3\n0 1 1\n"), ParseError);
    }
    SUBCASE("vertex out of range") {
        CHECK_THROWS_AS(MultiHypergraph::parse("4 3\n0 1 4\n"), ParseError);
    }
    SUBCASE("wrong arity") {
        CHECK_THROWS_AS(MultiHypergraph::parse("4 3\n0 1\n"), ParseError);
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_AS(MultiHypergraph::parse("4\n0 1 2\n"), ParseError);
        CHECK_THROWS_AS(MultiHypergraph::parse("x 3\n"), ParseError);
        CHECK_THROWS_AS(MultiHypergraph::parse(""), ParseError);
    }
}

TEST_CASE("normalization and round-trip") {
    auto h = MultiHypergraph::parse("5 3\n4 2 0\n1 2 3\n0 2 4\n");
    // sorted edges, lexicographic edge order, duplicates adjacent
    CHECK(h.edge(0) == std::vector<int>{0, 2, 4});
    CHECK(h.edge(1) == std::vector<int>{0, 2, 4});
    CHECK(h.edge(2) == std::vector<int>{1, 2, 3});
    auto again = MultiHypergraph::parse(h.serialize());
    CHECK(again == h);
    CHECK(again.serialize() == h.serialize());
}

TEST_CASE("normalization idempotence on random hypergraphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = oracle::random_hypergraph(7, 3, 5, rng);
        auto round = MultiHypergraph::parse(h.serialize());
        CHECK(round == h);
        CHECK(round.serialize() == h.serialize());
    }
}

TEST_CASE("degree profile") {
    SUBCASE("single edge") {
        auto h = MultiHypergraph::parse("3 3\n0 1 2\n");
        CHECK(h.degree_profile() == std::vector<int>{1, 1, 1});
    }
    SUBCASE("multiplicity counts") {
        auto h = MultiHypergraph::parse("4 3\n0 1 2\n0 1 2\n");
        CHECK(h.degree_profile() == std::vector<int>{2, 2, 2, 0});
    }
    SUBCASE("three 8-subsets of a 9-set") {
        auto h = disjoint_cliques(9, 8, 4);
        auto deg = h.degree_profile();
        long long sum = std::accumulate(deg.begin(), deg.end(), 0LL);
        CHECK(sum == 24);
        for (int d : deg) CHECK((d == 2 || d == 3));
    }
}

TEST_CASE("degree handshake over random hypergraphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = oracle::random_hypergraph(8, 4, 6, rng);
        auto deg = h.degree_profile();
        long long sum = std::accumulate(deg.begin(), deg.end(), 0LL);
        CHECK(sum == static_cast<long long>(h.uniformity()) * h.edge_count());
    }
}

TEST_CASE("incidence graph") {
    SUBCASE("one edge") {
        auto h = MultiHypergraph::parse("3 3\n0 1 2\n");
        auto ig = incidence_graph(h);
        CHECK(ig.graph.vertex_count() == 4);
        CHECK(ig.graph.edge_count() == 3);
        CHECK(ig.average_degree() == Rational(3, 2));
    }
    SUBCASE("density at the multi bound") {
        auto h = multi_blocks(6, 3, 3);  // e = n(k-1)/r = 4
        auto ig = incidence_graph(h);
        CHECK(ig.average_degree() == Rational(12, 5));
        CHECK(ig.average_degree() >= Rational(2));  // 2(k-2) at k=3
    }
    SUBCASE("empty hypergraph") {
        auto h = MultiHypergraph::parse("5 3\n");
        CHECK(incidence_graph(h).average_degree() == Rational(0));
    }
    SUBCASE("every instance vertex has degree r") {
        std::mt19937 rng(99);
        auto h = oracle::random_hypergraph(8, 4, 6, rng);
        auto ig = incidence_graph(h);
        for (int i = 0; i < ig.right; ++i)
            CHECK(ig.graph.degree(ig.edge_vertex(i)) == h.uniformity());
        for (int v = 0; v < ig.left; ++v)
            CHECK(ig.graph.degree(v) == h.degree_profile()[v]);
    }
}

TEST_CASE("embedding verification error taxonomy") {
    auto h = MultiHypergraph::parse("4 3\n0 1 2\n0 1 3\n0 2 3\n");
    Tree path3(3, {{0, 1}, {1, 2}, {2, 3}});
    BergeEmbedding good{{1, 0, 2, 3}, {1, 0, 2}};
    CHECK(verify_embedding(h, path3, good));

    BergeEmbedding repeat_vertex{{1, 1, 2, 3}, {1, 0, 2}};
    CHECK_FALSE(verify_embedding(h, path3, repeat_vertex));

    BergeEmbedding repeat_instance{{1, 0, 2, 3}, {1, 1, 2}};
    CHECK_FALSE(verify_embedding(h, path3, repeat_instance));

    BergeEmbedding broken_containment{{1, 0, 2, 3}, {0, 1, 2}};
    CHECK_FALSE(verify_embedding(h, path3, broken_containment));

    BergeEmbedding out_of_range{{1, 0, 2, 9}, {1, 0, 2}};
    CHECK_THROWS_AS((void)verify_embedding(h, path3, out_of_range), std::out_of_range);
    BergeEmbedding bad_instance{{1, 0, 2, 3}, {1, 0, 7}};
    CHECK_THROWS_AS((void)verify_embedding(h, path3, bad_instance), std::out_of_range);
}

TEST_CASE("embedding serialization is stable") {
    BergeEmbedding emb{{1, 0, 2, 3}, {1, 0, 2}};
    CHECK(serialize_embedding(emb) == "vmap: 0->1 1->0 2->2 3->3\nemap: 0->1 1->0 2->2\n");
}

TEST_CASE("with_edge keeps instance identity") {
    auto h = MultiHypergraph::parse("4 3\n0 1 2\n0 1 3\n");
    auto ext = h.with_edge({0, 1, 2});
    CHECK(ext.hypergraph.edge_count() == 3);
    // both copies of {0,1,2} sit before {0,1,3}
    CHECK(ext.old_to_new.size() == 2);
    for (int i = 0; i < 2; ++i) CHECK(ext.hypergraph.edge(ext.old_to_new[i]) == h.edge(i));
    CHECK(ext.hypergraph.edge(ext.new_edge_index) == std::vector<int>{0, 1, 2});
}

TEST_CASE("induced subhypergraph drops touched edges") {
    auto h = MultiHypergraph::parse("5 3\n0 1 2\n2 3 4\n");
    auto sub = h.induced({0, 1, 2, 3});
    CHECK(sub.hypergraph.vertex_count() == 4);
    CHECK(sub.hypergraph.edge_count() == 1);
    CHECK(sub.edge_orig == std::vector<int>{0});
    CHECK(sub.vertex_orig == std::vector<int>{0, 1, 2, 3});
}
