#ifndef DCOC_SOLVER_HPP
#define DCOC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dcoc/instance.hpp"
#include "dcoc/vertex_set.hpp"

namespace dcoc::solver {

// A t-valid triple: (Y, Z) partitions the vertices with |Y| = t, and S is a
// minimal set covering every backward arc (one from Z into Y), |S| <= k,
// with high-out-degree members of S placed in Y and high-in-degree members
// placed in Z. Z is derived as the complement of Y.
struct ValidTriple {
    int t = 0;
    VertexSet y;
    VertexSet s;

    VertexSet z() const { return ~y; }

    friend bool operator==(const ValidTriple& a, const ValidTriple& b) {
        return a.t == b.t && a.y == b.y && a.s == b.s;
    }
    // canonical order within a level: (Y words, S words)
    friend bool operator<(const ValidTriple& a, const ValidTriple& b) {
        if (a.t != b.t) return a.t < b.t;
        if (!(a.y == b.y)) return a.y < b.y;
        return a.s < b.s;
    }
};

// Degree-forced placement at level t: vertices with out-degree > n-t+k must
// go to Y, vertices with in-degree > t+k must go to Z; the rest are free.
// A vertex forced both ways means the level holds no valid triples.
struct ForcedPartition {
    VertexSet y_forced;
    VertexSet z_forced;
    VertexSet free_set;
    bool conflict = false;
};

ForcedPartition forced_partition(const Digraph& d, int t, int k);

// All minimal vertex covers of size <= k of the given undirected graph,
// deduplicated, in canonical order. Degree >= k+1 vertices are committed
// up front; if more than k^2 edges survive the reduction there is no cover
// of size <= k; remaining edges are resolved by binary branching and the
// leaves filtered for minimality. At most 2^k covers exist.
std::vector<VertexSet> enumerate_min_vertex_covers(int n,
                                                   const std::vector<std::pair<int, int>>& edges,
                                                   int k);

std::vector<ValidTriple> enumerate_t_valid_triples(const Digraph& d, int t, int k);

// Arc test between triples of consecutive growth: returns the weight
// |S1 \ S2| + max(0, |Z1 n Y2 \ (S1 u S2)| - ell) when (a, b) is an arc of
// the state graph for budget k, nothing otherwise.
std::optional<int> state_arc_weight(const ValidTriple& a, const ValidTriple& b, int k, int ell);

// The delta-map arc test trades the word-parallel set operations for an
// O(k) walk over the per-level free sets and the S members. Results are
// identical; the bitset test is the default.
enum class ArcTest { bitset, delta };

struct BuildOptions {
    ArcTest arc_test = ArcTest::bitset;
    bool parallel = true;
};

struct StateArc {
    uint32_t from = 0;
    uint32_t to = 0;
    int weight = 0;
};

// Leveled weighted acyclic digraph over all valid triples. Triple ids are
// level-major in canonical order; arcs only connect lower levels to
// strictly higher ones. Level t' pairs with t'' are skipped (and counted
// as pruned) when t''-t' is large enough that any arc weight would exceed
// the budget.
struct StateGraph {
    int n = 0;
    int k = 0;
    int ell = 0;
    std::vector<std::vector<ValidTriple>> levels;
    std::vector<uint32_t> level_offsets; // size levels.size()+1
    std::vector<std::vector<StateArc>> in_arcs;
    uint32_t source = 0;
    uint32_t sink = 0;
    long long arcs_generated = 0;
    long long arcs_pruned = 0;
    double enumerate_ms = 0;
    double arcs_ms = 0;

    size_t triple_count() const { return level_offsets.empty() ? 0 : level_offsets.back(); }
    int level_of(uint32_t id) const;
    const ValidTriple& triple(uint32_t id) const;
};

StateGraph build_state_graph(const Instance& inst, const BuildOptions& opts = {});

struct Solution {
    VertexSet x;
    int cost = 0;                              // |x|
    std::vector<uint32_t> path;                // triple ids, source..sink; empty under the shortcut
    std::vector<ValidTriple> path_triples;     // the triples behind those ids, for reporting
    std::vector<std::vector<int>> slab_choices; // per path arc, the vertices deleted from its slab
    bool shortcut = false;
};

struct SolveStats {
    double enumerate_ms = 0;
    double arcs_ms = 0;
    double dp_ms = 0;
    double reconstruct_ms = 0;
    std::vector<size_t> triples_per_level;
    long long arcs_generated = 0;
    long long arcs_pruned = 0;
    bool shortcut = false;
    long long dp_cost = -1; // shortest path cost, -1 when the DP did not run
};

// Decide (D, ell, k) on a semicomplete digraph and produce a witness.
// When k + ell >= n any k deletions suffice, so the lowest max(0, n-ell)
// vertex ids are returned without touching the state graph. Otherwise the
// level-wise shortest-path DP runs and X is rebuilt from the optimal path.
std::optional<Solution> solve(const Instance& inst, const BuildOptions& opts = {},
                              SolveStats* stats = nullptr);

// Exact minimum deletion-set size when it is at most k, nothing otherwise.
// Runs the DP with the budget clamped to min(k, n-ell-1); costs above that
// clamp can only be n-ell exactly, which the k + ell >= n case reports
// directly. Exponential in the clamped budget, like solve.
std::optional<long long> min_cost(const Instance& inst, const BuildOptions& opts = {});

} // namespace dcoc::solver

#endif
