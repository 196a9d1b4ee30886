#include <doctest.h>

#include "dcoc/generators.hpp"
#include "dcoc/oracle.hpp"
#include "dcoc/rng.hpp"
#include "test_support.hpp"

using namespace dcoc;
using oracle::brute_force_triples;
using oracle::min_feedback_vertex_set;
using oracle::optimal_coc;

TEST_CASE("optimal_coc worked examples") {
    auto r1 = optimal_coc(test::triangle(), 1, 3);
    REQUIRE(r1.has_value());
    CHECK(r1->optimum == 1);
    CHECK(mco(test::triangle(), r1->witness) <= 1);

    auto r2 = optimal_coc(gen::transitive_tournament(5), 1, 0);
    REQUIRE(r2.has_value());
    CHECK(r2->optimum == 0);

    // regression fixture frozen from this very enumeration
    auto r3 = optimal_coc(test::circulant5(), 1, 5);
    REQUIRE(r3.has_value());
    CHECK(r3->optimum == 2);
    CHECK(r3->witness == VertexSet::of(5, {0, 1}));
}

TEST_CASE("optimal_coc refuses large inputs and clamps cap") {
    Digraph big = gen::transitive_tournament(25);
    CHECK_THROWS_AS(optimal_coc(big, 1, 1), Error);

    auto r = optimal_coc(test::triangle(), 1, 99);
    REQUIRE(r.has_value());
    CHECK(r->optimum == 1);
}

TEST_CASE("optimal_coc succeeds at cap = n and is monotone in ell") {
    SplitMix64 rng(12);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 1 + static_cast<int>(rng.bounded(6));
        Digraph d = test::random_digraph(n, rng);
        int prev = n + 1;
        for (int ell = 1; ell <= 3; ++ell) {
            auto r = optimal_coc(d, ell, n);
            REQUIRE(r.has_value());
            CHECK(verify_solution(Instance(d, ell, r->optimum), r->witness));
            if (r->optimum > 0) {
                // nothing smaller works
                CHECK(!optimal_coc(d, ell, r->optimum - 1).has_value());
            }
            CHECK(r->optimum <= prev);
            prev = r->optimum;
        }
    }
}

TEST_CASE("serial and OpenMP oracle scans return identical results") {
    SplitMix64 rng(13);
    for (int iter = 0; iter < 15; ++iter) {
        const int n = 4 + static_cast<int>(rng.bounded(7));
        Digraph d = gen::random_tournament(n, rng.next());
        for (int ell = 1; ell <= 2; ++ell) {
            auto a = optimal_coc(d, ell, n, false);
            auto b = optimal_coc(d, ell, n, true);
            REQUIRE(a.has_value());
            REQUIRE(b.has_value());
            CHECK(a->optimum == b->optimum);
            CHECK(a->witness == b->witness);
        }
    }
}

TEST_CASE("min_feedback_vertex_set worked examples") {
    auto tri = min_feedback_vertex_set(test::triangle(), 3);
    REQUIRE(tri.has_value());
    CHECK(tri->optimum == 1);

    auto acyc = min_feedback_vertex_set(gen::transitive_tournament(6), 6);
    REQUIRE(acyc.has_value());
    CHECK(acyc->optimum == 0);

    Digraph two = Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto r = min_feedback_vertex_set(two, 6);
    REQUIRE(r.has_value());
    CHECK(r->optimum == 2);
}

TEST_CASE("brute force triples worked examples") {
    for (uint64_t seed : {21, 22}) {
        Digraph d = gen::random_semicomplete(5, 0.4, seed);
        auto t0 = brute_force_triples(d, 0, 2);
        REQUIRE(t0.size() == 1);
        CHECK(t0[0].y.empty());
        CHECK(t0[0].s.empty());
    }

    auto t2 = brute_force_triples(gen::transitive_tournament(3), 2, 0);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].y == VertexSet::of(3, {0, 1}));

    // triangle, t=1, k=1: frozen from the definition check of all
    // 3 partitions x subsets of size <= 1
    auto t1 = brute_force_triples(test::triangle(), 1, 1);
    CHECK(t1.size() == 6);
    for (const auto& tr : t1) CHECK(tr.s.count() == 1);
}

TEST_CASE("brute force guard") {
    CHECK_THROWS_AS(brute_force_triples(gen::transitive_tournament(17), 1, 1), Error);
}
