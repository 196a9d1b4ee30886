#include "dcoc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>
#include <numeric>
#include <string>

#include "dcoc/errors.hpp"

namespace dcoc::solver {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// bits of (a & b & ~c) exist?
bool any_and_andnot(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
    const auto& wa = a.words();
    const auto& wb = b.words();
    const auto& wc = c.words();
    for (size_t i = 0; i < wa.size(); ++i)
        if (wa[i] & wb[i] & ~wc[i]) return true;
    return false;
}

// Binary branching over the post-kernel edges: every minimal cover that
// extends `cur` within `budget` extra vertices shows up as a leaf.
void branch_covers(const std::vector<std::pair<int, int>>& edges, size_t ei, int budget,
                   VertexSet& cur, std::vector<VertexSet>& out) {
    while (ei < edges.size() && (cur.test(edges[ei].first) || cur.test(edges[ei].second))) ++ei;
    if (ei == edges.size()) {
        out.push_back(cur);
        return;
    }
    if (budget <= 0) return;
    auto [u, v] = edges[ei];
    cur.set(u);
    branch_covers(edges, ei + 1, budget - 1, cur, out);
    cur.reset(u);
    cur.set(v);
    branch_covers(edges, ei + 1, budget - 1, cur, out);
    cur.reset(v);
}

template <class MinimalPred>
std::vector<VertexSet> finalize_covers(std::vector<VertexSet> covers, MinimalPred minimal, int k) {
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    std::vector<VertexSet> out;
    out.reserve(covers.size());
    for (auto& s : covers)
        if (minimal(s)) out.push_back(std::move(s));
    assert(k >= 62 || out.size() <= (size_t{1} << k));
    (void)k;
    return out;
}

// Per-level context for cover enumeration: vertices with a backward arc
// against one of the forced sides are the same for every partition of the
// level, so they are detected once.
struct LevelContext {
    const Digraph& d;
    int k;
    VertexSet fixed_back_y; // v with an in-arc from z_forced
    VertexSet fixed_back_z; // v with an out-arc into y_forced
};

// Minimal covers of size <= k of the backward bipartite graph induced by
// the partition (ymask, ~ymask): edge {y, z} iff arc z -> y. Word-parallel
// counterpart of enumerate_min_vertex_covers for the solver's hot path.
// Only candidate vertices (those that can be incident to a backward arc,
// i.e. marked in the level context or adjacent to the partition's free
// picks) are ever touched.
std::vector<VertexSet> covers_for_partition(const LevelContext& ctx, const VertexSet& ymask,
                                            const std::vector<int>& free_in_y,
                                            const std::vector<int>& free_in_z) {
    const Digraph& d = ctx.d;
    const int k = ctx.k;
    const int n = d.n();
    const VertexSet zmask = ~ymask;

    VertexSet cand_y = ctx.fixed_back_y;
    for (int z : free_in_z) cand_y |= d.out_row(z);
    cand_y &= ymask;
    VertexSet cand_z = ctx.fixed_back_z;
    for (int y : free_in_y) cand_z |= d.in_row(y);
    cand_z &= zmask;

    VertexSet forced(n);
    int forced_count = 0;
    bool over_budget = false;
    cand_y.for_each([&](int y) {
        if (over_budget) return;
        if (d.in_row(y).count_and(zmask) >= k + 1) {
            forced.set(y);
            if (++forced_count > k) over_budget = true;
        }
    });
    if (over_budget) return {};
    cand_z.for_each([&](int z) {
        if (over_budget) return;
        if (d.out_row(z).count_and(ymask) >= k + 1) {
            forced.set(z);
            if (++forced_count > k) over_budget = true;
        }
    });
    if (over_budget) return {};

    const long long edge_cap = static_cast<long long>(k) * k;
    const VertexSet zfree = cand_z - forced;
    std::vector<std::pair<int, int>> rem;
    bool too_many = false;
    cand_y.for_each([&](int y) {
        if (too_many || forced.test(y)) return;
        const auto& row = d.in_row(y).words();
        const auto& zf = zfree.words();
        for (size_t i = 0; i < row.size() && !too_many; ++i) {
            uint64_t w = row[i] & zf[i];
            while (w) {
                int z = static_cast<int>(i * 64) + std::countr_zero(w);
                w &= w - 1;
                rem.emplace_back(y, z);
                if (static_cast<long long>(rem.size()) > edge_cap) {
                    too_many = true;
                    break;
                }
            }
        }
    });
    if (too_many) return {};

    std::vector<VertexSet> covers;
    VertexSet cur = forced;
    branch_covers(rem, 0, k - forced_count, cur, covers);

    auto minimal = [&](const VertexSet& s) {
        bool ok = true;
        s.for_each([&](int v) {
            if (!ok) return;
            bool has_private = ymask.test(v) ? any_and_andnot(d.in_row(v), zmask, s)
                                             : any_and_andnot(d.out_row(v), ymask, s);
            if (!has_private) ok = false;
        });
        return ok;
    };
    return finalize_covers(std::move(covers), minimal, k);
}

struct LevelData {
    std::vector<ValidTriple> triples;
    std::vector<int> free_verts;
};

LevelData enumerate_level_impl(const Digraph& d, int t, int k) {
    const int n = d.n();
    LevelData out;

    VertexSet y_forced(n), z_forced(n);
    bool conflict = false;
    int y_forced_count = 0;
    for (int v = 0; v < n; ++v) {
        bool hy = d.out_deg(v) > n - t + k;
        bool hz = d.in_deg(v) > t + k;
        if (hy && hz) conflict = true;
        if (hy) {
            y_forced.set(v);
            ++y_forced_count;
        } else if (!hz) {
            out.free_verts.push_back(v);
        }
        if (hz) z_forced.set(v);
    }
    if (conflict) return out;

    const int free_size = static_cast<int>(out.free_verts.size());
    const int need = t - y_forced_count;
    if (need < 0 || need > free_size) return out;
    // a level admitting any valid triple has at most 7k+2 unforced vertices
    if (free_size > 7 * k + 2) return out;

    LevelContext ctx{d, k, VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        if (d.in_row(v).intersects(z_forced)) ctx.fixed_back_y.set(v);
        if (d.out_row(v).intersects(y_forced)) ctx.fixed_back_z.set(v);
    }

    std::vector<int> idx(static_cast<size_t>(need));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> free_in_y, free_in_z;
    for (;;) {
        VertexSet ymask = y_forced;
        free_in_y.clear();
        free_in_z.clear();
        for (int i : idx) ymask.set(out.free_verts[static_cast<size_t>(i)]);
        for (int v : out.free_verts)
            (ymask.test(v) ? free_in_y : free_in_z).push_back(v);

        for (auto& s : covers_for_partition(ctx, ymask, free_in_y, free_in_z)) {
#ifndef NDEBUG
            s.for_each([&](int v) {
                assert(!(d.out_deg(v) > n - t + k) || ymask.test(v));
                assert(!(d.in_deg(v) > t + k) || !ymask.test(v));
            });
#endif
            out.triples.push_back(ValidTriple{t, ymask, std::move(s)});
        }

        int i = need - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == free_size - need + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < need; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    std::sort(out.triples.begin(), out.triples.end());
    assert(std::adjacent_find(out.triples.begin(), out.triples.end()) == out.triples.end());
    return out;
}

// arc test between prepared triples; -1 when not an arc
int arc_weight_bitset(const ValidTriple& a, const ValidTriple& b, int k, int ell) {
    const auto& ya = a.y.words();
    const auto& yb = b.y.words();
    const auto& sa = a.s.words();
    const auto& sb = b.s.words();
    int s1_minus_s2 = 0;
    int slab = 0;
    for (size_t i = 0; i < ya.size(); ++i) {
        const uint64_t wya = ya[i], wyb = yb[i], wsa = sa[i], wsb = sb[i];
        if (wya & ~wyb) return -1;               // Y1 must grow into Y2
        if (wsa & ~wya & ~wyb & ~wsb) return -1; // S1 members staying in Z stay in S
        if (wya & ~wsa & wsb) return -1;         // settled Y1 vertices never re-enter S
        s1_minus_s2 += std::popcount(wsa & ~wsb);
        slab += std::popcount(~wya & wyb & ~wsa & ~wsb);
    }
    int w = s1_minus_s2 + std::max(0, slab - ell);
    return w <= k ? w : -1;
}

// O(k)-flavored test: membership flips can only happen inside the per-level
// free sets (everything else is degree-forced consistently across levels),
// so it is enough to walk those plus the two S lists.
int arc_weight_delta(const ValidTriple& a, const ValidTriple& b, const std::vector<int>& free_a,
                     const std::vector<int>& free_b, const std::vector<int>& s_list_a,
                     const std::vector<int>& s_list_b, int k, int ell) {
    for (int x : free_a)
        if (a.y.test(x) && !b.y.test(x)) return -1;
    for (int x : free_b)
        if (a.y.test(x) && !b.y.test(x)) return -1;
    for (int x : s_list_a)
        if (!a.y.test(x) && !b.y.test(x) && !b.s.test(x)) return -1;
    for (int x : s_list_b)
        if (a.y.test(x) && !a.s.test(x)) return -1;

    int s1_minus_s2 = 0;
    for (int x : s_list_a)
        if (!b.s.test(x)) ++s1_minus_s2;
    int covered_in_slab = 0;
    for (int x : s_list_a)
        if (!a.y.test(x) && b.y.test(x)) ++covered_in_slab;
    for (int x : s_list_b)
        if (!a.y.test(x) && b.y.test(x) && !a.s.test(x)) ++covered_in_slab;
    int slab = (b.t - a.t) - covered_in_slab;
    int w = s1_minus_s2 + std::max(0, slab - ell);
    return w <= k ? w : -1;
}

StateGraph build_impl(const Digraph& d, int ell, int k, const BuildOptions& opts) {
    require_semicomplete(d);
    if (!d.has_matrix())
        fail("too_large", "semicomplete solver requires n <= " + std::to_string(Digraph::kMatrixLimit));
    const int n = d.n();
    if (n < 1) fail("bad_args", "state graph needs at least one vertex");

    StateGraph g;
    g.n = n;
    g.k = k;
    g.ell = ell;
    g.levels.resize(static_cast<size_t>(n) + 1);
    std::vector<std::vector<int>> level_free(static_cast<size_t>(n) + 1);

    auto t0 = Clock::now();
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int t = 0; t <= n; ++t) {
        LevelData ld = enumerate_level_impl(d, t, k);
        g.levels[static_cast<size_t>(t)] = std::move(ld.triples);
        level_free[static_cast<size_t>(t)] = std::move(ld.free_verts);
    }
    g.enumerate_ms = ms_since(t0);

    g.level_offsets.assign(static_cast<size_t>(n) + 2, 0);
    for (int t = 0; t <= n; ++t)
        g.level_offsets[static_cast<size_t>(t) + 1] =
            g.level_offsets[static_cast<size_t>(t)] + static_cast<uint32_t>(g.levels[static_cast<size_t>(t)].size());
    const uint32_t total = g.level_offsets.back();

    if (g.levels[0].size() != 1 || g.levels[static_cast<size_t>(n)].size() != 1)
        fail("internal", "state graph is missing its source or sink triple");
    g.source = 0;
    g.sink = total - 1;

    auto pruned = [&](int t1, int t2) {
        int gap = t2 - t1;
        return gap > ell + 2 * k && std::max(0, gap - 2 * k - ell) > k;
    };
    for (int t1 = 0; t1 <= n; ++t1)
        for (int t2 = t1 + 1; t2 <= n; ++t2)
            if (pruned(t1, t2))
                g.arcs_pruned += static_cast<long long>(g.levels[static_cast<size_t>(t1)].size()) *
                                 static_cast<long long>(g.levels[static_cast<size_t>(t2)].size());

    std::vector<std::vector<int>> s_lists;
    if (opts.arc_test == ArcTest::delta) {
        s_lists.resize(total);
        for (int t = 0; t <= n; ++t)
            for (size_t i = 0; i < g.levels[static_cast<size_t>(t)].size(); ++i)
                s_lists[g.level_offsets[static_cast<size_t>(t)] + i] =
                    g.levels[static_cast<size_t>(t)][i].s.to_vector();
    }

    auto test_arc = [&](int t1, uint32_t u, const ValidTriple& a, int t2, uint32_t v,
                        const ValidTriple& b) -> int {
        (void)t1;
        (void)t2;
        if (opts.arc_test == ArcTest::bitset) return arc_weight_bitset(a, b, k, ell);
        return arc_weight_delta(a, b, level_free[static_cast<size_t>(t1)], level_free[static_cast<size_t>(t2)],
                                s_lists[u], s_lists[v], k, ell);
    };

    g.in_arcs.assign(total, {});
    auto t1c = Clock::now();
    if (opts.parallel) {
        // OpenMP kernel: each target triple collects its in-arcs independently
#pragma omp parallel for schedule(dynamic, 16)
        for (long long vi = 0; vi < static_cast<long long>(total); ++vi) {
            const uint32_t v = static_cast<uint32_t>(vi);
            const int t2 = g.level_of(v);
            const ValidTriple& b = g.triple(v);
            for (int t1 = 0; t1 < t2; ++t1) {
                if (g.levels[static_cast<size_t>(t1)].empty() || pruned(t1, t2)) continue;
                const uint32_t base = g.level_offsets[static_cast<size_t>(t1)];
                for (size_t i = 0; i < g.levels[static_cast<size_t>(t1)].size(); ++i) {
                    const uint32_t u = base + static_cast<uint32_t>(i);
                    int w = test_arc(t1, u, g.levels[static_cast<size_t>(t1)][i], t2, v, b);
                    if (w >= 0) g.in_arcs[v].push_back(StateArc{u, v, w});
                }
            }
        }
    } else {
        // serial reference implementation, kept for testing the kernel above
        for (int t1 = 0; t1 <= n; ++t1) {
            const uint32_t base1 = g.level_offsets[static_cast<size_t>(t1)];
            for (size_t i = 0; i < g.levels[static_cast<size_t>(t1)].size(); ++i) {
                const uint32_t u = base1 + static_cast<uint32_t>(i);
                const ValidTriple& a = g.levels[static_cast<size_t>(t1)][i];
                for (int t2 = t1 + 1; t2 <= n; ++t2) {
                    if (g.levels[static_cast<size_t>(t2)].empty() || pruned(t1, t2)) continue;
                    const uint32_t base2 = g.level_offsets[static_cast<size_t>(t2)];
                    for (size_t j = 0; j < g.levels[static_cast<size_t>(t2)].size(); ++j) {
                        const uint32_t v = base2 + static_cast<uint32_t>(j);
                        int w = test_arc(t1, u, a, t2, v, g.levels[static_cast<size_t>(t2)][j]);
                        if (w >= 0) g.in_arcs[v].push_back(StateArc{u, v, w});
                    }
                }
            }
        }
    }
    g.arcs_ms = ms_since(t1c);

    for (const auto& arcs : g.in_arcs) g.arcs_generated += static_cast<long long>(arcs.size());
    return g;
}

constexpr long long kInf = LLONG_MAX / 4;

struct DpResult {
    std::vector<long long> dist;
    std::vector<uint32_t> pred;
};

DpResult dp_shortest(const StateGraph& g) {
    const uint32_t total = static_cast<uint32_t>(g.triple_count());
    DpResult r;
    r.dist.assign(total, kInf);
    r.pred.assign(total, UINT32_MAX);
    r.dist[g.source] = 0;
    // ids are level-major and arcs only point upward, so id order is a
    // topological order; ties keep the lowest predecessor id
    for (uint32_t v = 0; v < total; ++v) {
        for (const StateArc& a : g.in_arcs[v]) {
            if (r.dist[a.from] == kInf) continue;
            long long cand = r.dist[a.from] + a.weight;
            if (cand < r.dist[v]) {
                r.dist[v] = cand;
                r.pred[v] = a.from;
            }
        }
    }
    return r;
}

Solution reconstruct(const Instance& inst, const StateGraph& g, const DpResult& dp) {
    const int n = g.n;
    Solution sol;
    sol.path.clear();
    for (uint32_t v = g.sink;; v = dp.pred[v]) {
        sol.path.push_back(v);
        if (v == g.source) break;
    }
    std::reverse(sol.path.begin(), sol.path.end());
    sol.path_triples.reserve(sol.path.size());
    for (uint32_t id : sol.path) sol.path_triples.push_back(g.triple(id));

    sol.x = VertexSet(n);
    for (size_t i = 1; i < sol.path.size(); ++i) {
        const ValidTriple& a = g.triple(sol.path[i - 1]);
        const ValidTriple& b = g.triple(sol.path[i]);
        sol.x |= a.s;
        sol.x |= b.s;
        VertexSet slab = (~a.y) & b.y;
        slab -= a.s;
        slab -= b.s;
        int need = slab.count() - g.ell;
        std::vector<int> choice;
        if (need > 0) {
            // lowest vertex ids of the slab, deterministic by contract
            slab.for_each([&](int v) {
                if (static_cast<int>(choice.size()) < need) {
                    choice.push_back(v);
                    sol.x.set(v);
                }
            });
        }
        sol.slab_choices.push_back(std::move(choice));
    }
    sol.cost = sol.x.count();
    if (sol.cost > dp.dist[g.sink])
        fail("internal", "reconstructed witness larger than the path cost");
    if (!verify_solution(inst, sol.x))
        fail("internal", "reconstructed witness failed verification");
    return sol;
}

} // namespace

int StateGraph::level_of(uint32_t id) const {
    auto it = std::upper_bound(level_offsets.begin(), level_offsets.end(), id);
    return static_cast<int>(it - level_offsets.begin()) - 1;
}

const ValidTriple& StateGraph::triple(uint32_t id) const {
    int t = level_of(id);
    return levels[static_cast<size_t>(t)][id - level_offsets[static_cast<size_t>(t)]];
}

ForcedPartition forced_partition(const Digraph& d, int t, int k) {
    require_semicomplete(d);
    if (t < 0 || t > d.n()) fail("bad_args", "level t outside 0..n");
    const int n = d.n();
    ForcedPartition fp{VertexSet(n), VertexSet(n), VertexSet(n), false};
    for (int v = 0; v < n; ++v) {
        bool hy = d.out_deg(v) > n - t + k;
        bool hz = d.in_deg(v) > t + k;
        if (hy) fp.y_forced.set(v);
        if (hz) fp.z_forced.set(v);
        if (hy && hz) fp.conflict = true;
        if (!hy && !hz) fp.free_set.set(v);
    }
    return fp;
}

std::vector<VertexSet> enumerate_min_vertex_covers(int n, const std::vector<std::pair<int, int>>& edges,
                                                   int k) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        assert(u >= 0 && u < n && v >= 0 && v < n && u != v);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    VertexSet forced(n);
    int forced_count = 0;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] >= k + 1) {
            forced.set(v);
            ++forced_count;
        }
    if (forced_count > k) return {};

    std::vector<std::pair<int, int>> rem;
    for (auto [u, v] : edges)
        if (!forced.test(u) && !forced.test(v)) rem.emplace_back(u, v);
    if (static_cast<long long>(rem.size()) > static_cast<long long>(k) * k) return {};

    std::vector<VertexSet> covers;
    VertexSet cur = forced;
    branch_covers(rem, 0, k - forced_count, cur, covers);

    auto minimal = [&](const VertexSet& s) {
        bool ok = true;
        s.for_each([&](int v) {
            if (!ok) return;
            bool has_private = false;
            for (auto [a, b] : edges) {
                if (a == v && !s.test(b)) { has_private = true; break; }
                if (b == v && !s.test(a)) { has_private = true; break; }
            }
            if (!has_private) ok = false;
        });
        return ok;
    };
    return finalize_covers(std::move(covers), minimal, k);
}

std::vector<ValidTriple> enumerate_t_valid_triples(const Digraph& d, int t, int k) {
    require_semicomplete(d);
    if (!d.has_matrix())
        fail("too_large", "triple enumeration requires n <= " + std::to_string(Digraph::kMatrixLimit));
    if (t < 0 || t > d.n()) fail("bad_args", "level t outside 0..n");
    if (k < 0) fail("bad_args", "k must be non-negative");
    return enumerate_level_impl(d, t, k).triples;
}

std::optional<int> state_arc_weight(const ValidTriple& a, const ValidTriple& b, int k, int ell) {
    assert(a.y.capacity() == b.y.capacity());
    if (a.t >= b.t) return std::nullopt;
    int w = arc_weight_bitset(a, b, k, ell);
    if (w < 0) return std::nullopt;
    return w;
}

StateGraph build_state_graph(const Instance& inst, const BuildOptions& opts) {
    return build_impl(inst.digraph, inst.ell, inst.k, opts);
}

std::optional<Solution> solve(const Instance& inst, const BuildOptions& opts, SolveStats* stats) {
    const Digraph& d = inst.digraph;
    if (inst.ell < 1) fail("invalid_ell", "ell must be at least 1");
    require_semicomplete(d);
    const int n = d.n();

    if (inst.k + inst.ell >= n) {
        // deleting any k vertices leaves at most ell, so answer directly
        Solution sol;
        sol.shortcut = true;
        sol.x = VertexSet(n);
        const int take = std::max(0, n - inst.ell);
        for (int v = 0; v < take; ++v) sol.x.set(v);
        sol.cost = take;
        if (stats) stats->shortcut = true;
        if (!verify_solution(inst, sol.x)) fail("internal", "shortcut witness failed verification");
        return sol;
    }

    StateGraph g = build_impl(d, inst.ell, inst.k, opts);
    auto t0 = Clock::now();
    DpResult dp = dp_shortest(g);
    double dp_ms = ms_since(t0);

    if (stats) {
        stats->enumerate_ms = g.enumerate_ms;
        stats->arcs_ms = g.arcs_ms;
        stats->dp_ms = dp_ms;
        stats->triples_per_level.clear();
        for (const auto& lvl : g.levels) stats->triples_per_level.push_back(lvl.size());
        stats->arcs_generated = g.arcs_generated;
        stats->arcs_pruned = g.arcs_pruned;
        stats->shortcut = false;
        stats->dp_cost = dp.dist[g.sink] >= kInf ? -1 : dp.dist[g.sink];
    }

    if (dp.dist[g.sink] > inst.k) return std::nullopt;

    auto t1 = Clock::now();
    Solution sol = reconstruct(inst, g, dp);
    if (stats) stats->reconstruct_ms = ms_since(t1);
    return sol;
}

std::optional<long long> min_cost(const Instance& inst, const BuildOptions& opts) {
    const Digraph& d = inst.digraph;
    if (inst.ell < 1) fail("invalid_ell", "ell must be at least 1");
    require_semicomplete(d);
    const int n = d.n();
    if (n == 0 || inst.ell >= n) return 0;

    // Costs up to min(k, n-ell-1) are found exactly by the DP; the only
    // optimum that can exceed the clamp is n-ell itself, available whenever
    // k + ell >= n since deleting any n-ell vertices works.
    const int budget = std::min(inst.k, n - inst.ell - 1);
    StateGraph g = build_impl(d, inst.ell, budget, opts);
    DpResult dp = dp_shortest(g);
    long long c = dp.dist[g.sink];
    if (c <= budget) return c;
    if (inst.k + inst.ell >= n) return n - inst.ell;
    return std::nullopt;
}

} // namespace dcoc::solver
