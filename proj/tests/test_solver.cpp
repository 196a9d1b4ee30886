#include <doctest.h>

#include <algorithm>

#include "dcoc/generators.hpp"
#include "dcoc/oracle.hpp"
#include "dcoc/rng.hpp"
#include "dcoc/solver.hpp"
#include "test_support.hpp"

using namespace dcoc;
using solver::ArcTest;
using solver::BuildOptions;
using solver::StateGraph;
using solver::ValidTriple;

namespace {

ValidTriple make_triple(int n, int t, std::initializer_list<int> y, std::initializer_list<int> s) {
    return ValidTriple{t, VertexSet::of(n, y), VertexSet::of(n, s)};
}

bool same_arcs(const StateGraph& a, const StateGraph& b) {
    if (a.triple_count() != b.triple_count()) return false;
    if (a.in_arcs.size() != b.in_arcs.size()) return false;
    for (size_t v = 0; v < a.in_arcs.size(); ++v) {
        if (a.in_arcs[v].size() != b.in_arcs[v].size()) return false;
        for (size_t i = 0; i < a.in_arcs[v].size(); ++i) {
            const auto& x = a.in_arcs[v][i];
            const auto& y = b.in_arcs[v][i];
            if (x.from != y.from || x.to != y.to || x.weight != y.weight) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("forced partition on the transitive tournament") {
    Digraph d = gen::transitive_tournament(5);
    auto fp = solver::forced_partition(d, 2, 0);
    CHECK(fp.y_forced == VertexSet::of(5, {0}));
    CHECK(fp.z_forced == VertexSet::of(5, {3, 4}));
    CHECK(fp.free_set == VertexSet::of(5, {1, 2}));
    CHECK(!fp.conflict);
}

TEST_CASE("forced partition never forces Y at level 0") {
    for (uint64_t seed : {1, 2, 3}) {
        Digraph d = gen::random_tournament(6, seed);
        auto fp = solver::forced_partition(d, 0, 2);
        CHECK(fp.y_forced.empty());
    }
}

TEST_CASE("forced partition of the triangle leaves everyone free") {
    auto fp = solver::forced_partition(test::triangle(), 1, 1);
    CHECK(fp.free_set == VertexSet::full(3));
}

TEST_CASE("forced partition rejects non-semicomplete input") {
    CHECK_THROWS_AS(solver::forced_partition(Digraph::from_arcs(3, {{0, 1}}), 1, 0), Error);
}

TEST_CASE("triple enumeration worked examples") {
    // level 0 is always exactly the all-Z triple
    for (uint64_t seed : {4, 5}) {
        Digraph d = gen::random_semicomplete(6, 0.3, seed);
        auto triples = solver::enumerate_t_valid_triples(d, 0, 1);
        REQUIRE(triples.size() == 1);
        CHECK(triples[0].y.empty());
        CHECK(triples[0].s.empty());
    }

    Digraph trans3 = gen::transitive_tournament(3);
    auto t1 = solver::enumerate_t_valid_triples(trans3, 1, 0);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].y == VertexSet::of(3, {0}));
    CHECK(t1[0].s.empty());
    CHECK(t1[0].z() == VertexSet::of(3, {1, 2}));

    CHECK(solver::enumerate_t_valid_triples(test::triangle(), 1, 0).empty());

    // frozen by the definition-level enumeration: two covers per rotation
    auto t1k1 = solver::enumerate_t_valid_triples(test::triangle(), 1, 1);
    CHECK(t1k1.size() == 6);
}

TEST_CASE("fast triple enumeration equals the definition on random instances") {
    SplitMix64 rng(321);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(rng.bounded(6));
        Digraph d = rng.chance(1, 2) ? gen::random_tournament(n, rng.next())
                                     : gen::random_semicomplete(n, 0.25, rng.next());
        const int k = static_cast<int>(rng.bounded(3));
        for (int t = 0; t <= n; ++t) {
            auto fast = solver::enumerate_t_valid_triples(d, t, k);
            auto slow = oracle::brute_force_triples(d, t, k);
            REQUIRE(fast.size() == slow.size());
            for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
        }
    }
}

TEST_CASE("state arc worked examples") {
    const int n = 4;
    auto src = make_triple(n, 0, {}, {});
    ValidTriple sink{n, VertexSet::full(n), VertexSet(n)};

    auto w = solver::state_arc_weight(src, sink, 2, 2);
    REQUIRE(w.has_value());
    CHECK(*w == 2);

    auto w0 = solver::state_arc_weight(src, sink, 0, 4);
    REQUIRE(w0.has_value());
    CHECK(*w0 == 0);

    // weight above budget: no arc
    CHECK(!solver::state_arc_weight(src, sink, 1, 2).has_value());

    // wrong direction / equal level
    CHECK(!solver::state_arc_weight(sink, src, 4, 4).has_value());
    CHECK(!solver::state_arc_weight(src, src, 4, 4).has_value());

    auto a = make_triple(n, 1, {0}, {0});
    auto b = make_triple(n, 2, {0, 1}, {});
    auto w1 = solver::state_arc_weight(a, b, 1, 1);
    REQUIRE(w1.has_value());
    CHECK(*w1 == 1); // |{0} \ {}| + max(0, |{1}| - 1)
}

TEST_CASE("state arc conditions (ii) and (iii)") {
    const int n = 4;
    // x = 2 in S1, still in Z at both levels, but dropped from S2: no arc
    auto a = make_triple(n, 1, {0}, {2});
    auto b = make_triple(n, 2, {0, 1}, {});
    CHECK(!solver::state_arc_weight(a, b, 4, 4).has_value());

    // x = 0 in Y1 \ S1 but re-entering S2: no arc
    auto c = make_triple(n, 1, {0}, {});
    auto e = make_triple(n, 2, {0, 1}, {0});
    CHECK(!solver::state_arc_weight(c, e, 4, 4).has_value());

    // same x in S2 but now the slab vertex: fine
    auto f = make_triple(n, 2, {0, 1}, {1});
    CHECK(solver::state_arc_weight(c, f, 4, 4).has_value());
}

TEST_CASE("state graph of the transitive triple has a free ride") {
    Instance inst(gen::transitive_tournament(3), 1, 0);
    StateGraph g = solver::build_state_graph(inst);
    CHECK(g.levels[0].size() == 1);
    CHECK(g.levels[3].size() == 1);
    CHECK(g.triple(g.source).y.empty());
    CHECK(g.triple(g.sink).y == VertexSet::full(3));

    auto sol = solver::solve(inst);
    REQUIRE(sol.has_value());
    CHECK(sol->cost == 0);
    CHECK(sol->x.empty());
}

TEST_CASE("with ell >= n the source connects straight to the sink") {
    Digraph d = gen::random_tournament(5, 17);
    StateGraph g = solver::build_state_graph(Instance(d, 5, 0));
    bool direct = false;
    for (const auto& arc : g.in_arcs[g.sink])
        if (arc.from == g.source && arc.weight == 0) direct = true;
    CHECK(direct);
}

TEST_CASE("a vertex forced both ways empties the level") {
    // complete digraph on 4 vertices: every degree is 3
    Digraph::Builder b(4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) b.add_arc(u, v);
    Digraph d = b.build();
    auto fp = solver::forced_partition(d, 2, 0);
    CHECK(fp.conflict);
    CHECK(fp.y_forced == VertexSet::full(4));
    CHECK(fp.z_forced == VertexSet::full(4));
    CHECK(solver::enumerate_t_valid_triples(d, 2, 0).empty());
}

TEST_CASE("planted witnesses bound the solved cost") {
    auto planted = gen::planted_instance({3, 3}, 1, 5);
    auto sol = solver::solve(Instance(planted.digraph, planted.ell, planted.k));
    REQUIRE(sol.has_value());
    CHECK(sol->cost <= 1);
}

TEST_CASE("triangle needs one deletion") {
    CHECK(!solver::solve(Instance(test::triangle(), 1, 0)).has_value());

    auto sol = solver::solve(Instance(test::triangle(), 1, 1));
    REQUIRE(sol.has_value());
    CHECK(sol->cost == 1);
    CHECK(verify_solution(Instance(test::triangle(), 1, 1), sol->x));
}

TEST_CASE("transitive tournaments solve for free") {
    solver::SolveStats stats;
    auto sol = solver::solve(Instance(gen::transitive_tournament(6), 1, 0), {}, &stats);
    REQUIRE(sol.has_value());
    CHECK(sol->x.empty());
    CHECK(!stats.shortcut);
}

TEST_CASE("ell >= n rides the shortcut with an empty witness") {
    Digraph d = gen::random_tournament(5, 9);
    solver::SolveStats stats;
    auto sol = solver::solve(Instance(d, 5, 0), {}, &stats);
    REQUIRE(sol.has_value());
    CHECK(sol->shortcut);
    CHECK(stats.shortcut);
    CHECK(sol->cost == 0);
}

TEST_CASE("circulant 5-tournament: decision tracks the frozen optimum 2") {
    Digraph d = test::circulant5();
    auto orc = oracle::min_feedback_vertex_set(d, 5);
    REQUIRE(orc.has_value());
    CHECK(orc->optimum == 2); // regression fixture, computed by the oracle itself
    for (int k = 0; k <= 3; ++k) {
        auto sol = solver::solve(Instance(d, 1, k));
        CHECK(sol.has_value() == (k >= 2));
        if (sol) CHECK(verify_solution(Instance(d, 1, k), sol->x));
    }
}

TEST_CASE("min_cost worked examples") {
    auto c1 = solver::min_cost(Instance(test::triangle(), 1, 3));
    REQUIRE(c1.has_value());
    CHECK(*c1 == 1);

    auto c2 = solver::min_cost(Instance(test::triangle(), 3, 0));
    REQUIRE(c2.has_value());
    CHECK(*c2 == 0);

    auto c3 = solver::min_cost(Instance(gen::layered_tournament({3, 3}), 2, 2));
    REQUIRE(c3.has_value());
    CHECK(*c3 == 2);

    CHECK(!solver::min_cost(Instance(test::triangle(), 1, 0)).has_value());
}

TEST_CASE("min_cost equals the oracle optimum on random semicomplete digraphs") {
    SplitMix64 rng(55);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(rng.bounded(7));
        Digraph d = gen::random_semicomplete(n, 0.2, rng.next());
        const int ell = 1 + static_cast<int>(rng.bounded(3));
        auto orc = oracle::optimal_coc(d, ell, n);
        REQUIRE(orc.has_value());
        auto mc = solver::min_cost(Instance(d, ell, n));
        REQUIRE(mc.has_value());
        CHECK(*mc == orc->optimum);
    }
}

TEST_CASE("solver equals oracle on small random instances") {
    SplitMix64 rng(66);
    for (int iter = 0; iter < 80; ++iter) {
        const int n = 1 + static_cast<int>(rng.bounded(6));
        Digraph d = rng.chance(2, 3) ? gen::random_tournament(n, rng.next())
                                     : gen::random_semicomplete(n, 0.3, rng.next());
        const int ell = 1 + static_cast<int>(rng.bounded(3));
        const int k = static_cast<int>(rng.bounded(4));
        Instance inst(d, ell, k);
        bool oracle_yes = oracle::optimal_coc(d, ell, k).has_value();
        auto sol = solver::solve(inst);
        CHECK(sol.has_value() == oracle_yes);
        if (sol) {
            CHECK(verify_solution(inst, sol->x));
            CHECK(sol->cost <= k);
            // monotone in both parameters
            CHECK(solver::solve(Instance(d, ell + 1, k)).has_value());
            CHECK(solver::solve(Instance(d, ell, k + 1)).has_value());
        }
    }
}

TEST_CASE("reconstruction stays within the path cost") {
    SplitMix64 rng(88);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 4 + static_cast<int>(rng.bounded(5));
        Digraph d = gen::random_tournament(n, rng.next());
        const int ell = 1 + static_cast<int>(rng.bounded(2));
        const int k = static_cast<int>(rng.bounded(4));
        if (k + ell >= n) continue;
        solver::SolveStats stats;
        auto sol = solver::solve(Instance(d, ell, k), {}, &stats);
        if (!sol) continue;
        CHECK(sol->cost <= stats.dp_cost);
        CHECK(mco(d, sol->x) <= ell);
        REQUIRE(sol->path.size() >= 2);
        CHECK(sol->path.front() == 0);
        CHECK(sol->path_triples.front().t == 0);
        CHECK(sol->path_triples.back().t == n);
    }
}

TEST_CASE("level cardinality and free-set bounds hold") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        const int n = 2 + static_cast<int>(rng.bounded(6));
        Digraph d = gen::random_semicomplete(n, 0.2, rng.next());
        const int k = static_cast<int>(rng.bounded(3));
        for (int t = 0; t <= n; ++t) {
            auto triples = solver::enumerate_t_valid_triples(d, t, k);
            CHECK(triples.size() <= (size_t{1} << (8 * k + 2)));
            if (!triples.empty()) {
                auto fp = solver::forced_partition(d, t, k);
                CHECK(fp.free_set.count() <= 7 * k + 2);
            }
        }
    }
}

TEST_CASE("degree separation bound on layered splits") {
    SplitMix64 rng(111);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<int> sizes;
        const int blocks = 2 + static_cast<int>(rng.bounded(3));
        for (int i = 0; i < blocks; ++i) sizes.push_back(rng.chance(1, 3) ? 1 : 3 + static_cast<int>(rng.bounded(3)));
        Digraph d = gen::layered_tournament(sizes);
        const int n = d.n();

        int cut = 0;
        const int split = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(blocks - 1)));
        for (int i = 0; i < split; ++i) cut += sizes[static_cast<size_t>(i)];

        for (int p = 0; p <= 3; ++p) {
            int low_out = 0, low_in = 0;
            for (int v = 0; v < cut; ++v)
                if (d.out_deg(v) <= (n - cut) + p) ++low_out;
            for (int v = cut; v < n; ++v)
                if (d.in_deg(v) <= cut + p) ++low_in;
            CHECK(low_out <= 2 * p + 1);
            CHECK(low_in <= 2 * p + 1);
        }
    }
}

TEST_CASE("serial and OpenMP arc construction agree") {
    SplitMix64 rng(123);
    for (int iter = 0; iter < 10; ++iter) {
        const int n = 5 + static_cast<int>(rng.bounded(6));
        Digraph d = gen::random_semicomplete(n, 0.15, rng.next());
        const int ell = 1 + static_cast<int>(rng.bounded(2));
        const int k = static_cast<int>(rng.bounded(3));
        if (k + ell >= n) continue;
        Instance inst(d, ell, k);
        StateGraph serial = solver::build_state_graph(inst, BuildOptions{ArcTest::bitset, false});
        StateGraph parallel = solver::build_state_graph(inst, BuildOptions{ArcTest::bitset, true});
        CHECK(same_arcs(serial, parallel));
        CHECK(serial.arcs_generated == parallel.arcs_generated);
        CHECK(serial.arcs_pruned == parallel.arcs_pruned);
    }
}

TEST_CASE("bitset and delta arc tests agree") {
    SplitMix64 rng(124);
    for (int iter = 0; iter < 10; ++iter) {
        const int n = 5 + static_cast<int>(rng.bounded(6));
        Digraph d = gen::random_tournament(n, rng.next());
        const int ell = 1 + static_cast<int>(rng.bounded(2));
        const int k = static_cast<int>(rng.bounded(3));
        if (k + ell >= n) continue;
        Instance inst(d, ell, k);
        StateGraph bitset = solver::build_state_graph(inst, BuildOptions{ArcTest::bitset, false});
        StateGraph delta = solver::build_state_graph(inst, BuildOptions{ArcTest::delta, false});
        CHECK(same_arcs(bitset, delta));
    }
}

TEST_CASE("solver rejects bad inputs") {
    CHECK_THROWS_AS(solver::solve(Instance(Digraph::from_arcs(3, {{0, 1}}), 1, 1)), Error);
    Instance bad(test::triangle(), 1, 1);
    bad.ell = 0;
    CHECK_THROWS_AS(solver::solve(bad), Error);
}
