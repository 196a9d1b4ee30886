#include "dcoc/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#include "dcoc/errors.hpp"

namespace dcoc::oracle {

namespace {

// adjacency rows as 32-bit masks, enough for the n <= 24 guard
std::vector<uint32_t> mask_rows(const Digraph& d) {
    std::vector<uint32_t> rows(static_cast<size_t>(d.n()), 0);
    for (int u = 0; u < d.n(); ++u)
        for (int v : d.out_neighbors(u)) rows[static_cast<size_t>(u)] |= uint32_t{1} << v;
    return rows;
}

// max strong-component size of the subgraph on `alive`, iterative Tarjan
int mco_masked(const std::vector<uint32_t>& rows, int n, uint32_t alive) {
    std::array<int8_t, 32> index_of{};
    std::array<int, 32> index{}, lowlink{};
    index_of.fill(-1);
    int next = 0, best = 0;
    std::array<int, 32> stack{};
    int sp = 0;
    uint32_t on_stack = 0;
    std::array<std::pair<int, uint32_t>, 32> frames{};
    int fp = 0;

    for (int root = 0; root < n; ++root) {
        if (!((alive >> root) & 1) || index_of[static_cast<size_t>(root)] != -1) continue;
        index_of[static_cast<size_t>(root)] = 0;
        index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] = next++;
        stack[sp++] = root;
        on_stack |= uint32_t{1} << root;
        frames[fp++] = {root, rows[static_cast<size_t>(root)] & alive};
        while (fp > 0) {
            auto& [v, pending] = frames[static_cast<size_t>(fp - 1)];
            bool descended = false;
            while (pending) {
                int w = std::countr_zero(pending);
                pending &= pending - 1;
                if (index_of[static_cast<size_t>(w)] == -1) {
                    index_of[static_cast<size_t>(w)] = 0;
                    index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] = next++;
                    stack[sp++] = w;
                    on_stack |= uint32_t{1} << w;
                    frames[fp++] = {w, rows[static_cast<size_t>(w)] & alive};
                    descended = true;
                    break;
                }
                if ((on_stack >> w) & 1)
                    lowlink[static_cast<size_t>(v)] =
                        std::min(lowlink[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
            }
            if (descended) continue;
            if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                int size = 0;
                for (;;) {
                    int w = stack[--sp];
                    on_stack &= ~(uint32_t{1} << w);
                    ++size;
                    if (w == v) break;
                }
                best = std::max(best, size);
            }
            int finished = v;
            --fp;
            if (fp > 0) {
                int parent = frames[static_cast<size_t>(fp - 1)].first;
                lowlink[static_cast<size_t>(parent)] =
                    std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(finished)]);
            }
        }
    }
    return best;
}

uint64_t comb64(int n, int r) {
    if (r < 0 || r > n) return 0;
    uint64_t num = 1;
    for (int i = 0; i < r; ++i) num = num * static_cast<uint64_t>(n - i) / static_cast<uint64_t>(i + 1);
    return num;
}

// rank'th size-s subset of 0..n-1 in lexicographic order of sorted tuples
std::vector<int> unrank_lex(int n, int s, uint64_t rank) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(s));
    int low = 0;
    for (int i = 0; i < s; ++i) {
        for (int c = low;; ++c) {
            uint64_t block = comb64(n - 1 - c, s - 1 - i);
            if (rank < block) {
                out.push_back(c);
                low = c + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

bool next_combination(std::vector<int>& idx, int n) {
    const int s = static_cast<int>(idx.size());
    int i = s - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < s; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    return true;
}

uint32_t mask_of(const std::vector<int>& idx) {
    uint32_t m = 0;
    for (int v : idx) m |= uint32_t{1} << v;
    return m;
}

constexpr uint64_t kNoHit = ~uint64_t{0};

// first (lowest-rank) size-s subset whose removal brings mco down to ell,
// serial reference scan
uint64_t scan_size_serial(const std::vector<uint32_t>& rows, int n, uint32_t all, int ell, int s) {
    std::vector<int> idx(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
    uint64_t rank = 0;
    do {
        if (mco_masked(rows, n, all & ~mask_of(idx)) <= ell) return rank;
        ++rank;
    } while (next_combination(idx, n));
    return kNoHit;
}

// OpenMP kernel: chunked over subset ranks with a min-rank reduction, so
// the returned witness matches the serial scan exactly
uint64_t scan_size_parallel(const std::vector<uint32_t>& rows, int n, uint32_t all, int ell, int s) {
    const uint64_t total = comb64(n, s);
    const uint64_t chunk = 4096;
    const long long num_chunks = static_cast<long long>((total + chunk - 1) / chunk);
    std::atomic<uint64_t> best{kNoHit};
#pragma omp parallel for schedule(dynamic)
    for (long long ci = 0; ci < num_chunks; ++ci) {
        const uint64_t start = static_cast<uint64_t>(ci) * chunk;
        if (start >= best.load(std::memory_order_relaxed)) continue;
        const uint64_t stop = std::min(total, start + chunk);
        std::vector<int> idx = unrank_lex(n, s, start);
        for (uint64_t rank = start; rank < stop; ++rank) {
            if (rank >= best.load(std::memory_order_relaxed)) break;
            if (mco_masked(rows, n, all & ~mask_of(idx)) <= ell) {
                uint64_t cur = best.load(std::memory_order_relaxed);
                while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                }
                break;
            }
            if (!next_combination(idx, n)) break;
        }
    }
    return best.load();
}

} // namespace

std::optional<OracleResult> optimal_coc(const Digraph& d, int ell, int cap, bool parallel) {
    const int n = d.n();
    if (n > kMaxOracleN)
        fail("oracle_guard", "exhaustive oracle limited to n <= " + std::to_string(kMaxOracleN) +
                                 ", got n = " + std::to_string(n));
    if (ell < 0) fail("bad_args", "ell must be non-negative");
    cap = std::max(0, std::min(cap, n));

    const std::vector<uint32_t> rows = mask_rows(d);
    const uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    for (int s = 0; s <= cap; ++s) {
        uint64_t hit = parallel ? scan_size_parallel(rows, n, all, ell, s)
                                : scan_size_serial(rows, n, all, ell, s);
        if (hit != kNoHit) {
            OracleResult r;
            r.optimum = s;
            r.witness = VertexSet::from(n, unrank_lex(n, s, hit));
            return r;
        }
    }
    return std::nullopt;
}

std::optional<OracleResult> min_feedback_vertex_set(const Digraph& d, int cap, bool parallel) {
    return optimal_coc(d, 1, cap, parallel);
}

std::vector<solver::ValidTriple> brute_force_triples(const Digraph& d, int t, int k) {
    const int n = d.n();
    if (n > 16)
        fail("brute_force_guard", "definition-level enumeration limited to n <= 16, got n = " +
                                      std::to_string(n));
    require_semicomplete(d);
    if (t < 0 || t > n) fail("bad_args", "level t outside 0..n");
    if (k < 0) fail("bad_args", "k must be non-negative");

    const std::vector<uint32_t> rows = mask_rows(d);
    std::vector<solver::ValidTriple> out;

    std::vector<int> yidx(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) yidx[static_cast<size_t>(i)] = i;
    bool more_y = true;
    if (t == 0) yidx.clear();
    while (more_y) {
        const uint32_t ymask = mask_of(yidx);

        // backward arcs z -> y of this partition
        std::vector<std::pair<int, int>> back;
        for (int z = 0; z < n; ++z) {
            if ((ymask >> z) & 1) continue;
            uint32_t into_y = rows[static_cast<size_t>(z)] & ymask;
            while (into_y) {
                int y = std::countr_zero(into_y);
                into_y &= into_y - 1;
                back.emplace_back(z, y);
            }
        }

        auto covers = [&](uint32_t smask) {
            for (auto [z, y] : back)
                if (!((smask >> z) & 1) && !((smask >> y) & 1)) return false;
            return true;
        };

        for (int size = 0; size <= std::min(k, n); ++size) {
            std::vector<int> sidx(static_cast<size_t>(size));
            for (int i = 0; i < size; ++i) sidx[static_cast<size_t>(i)] = i;
            bool more_s = true;
            if (size == 0) sidx.clear();
            while (more_s) {
                const uint32_t smask = mask_of(sidx);
                bool ok = covers(smask);
                if (ok) {
                    // minimality: one-removal must break coverage
                    for (int v : sidx)
                        if (covers(smask & ~(uint32_t{1} << v))) {
                            ok = false;
                            break;
                        }
                }
                if (ok) {
                    // degree placement rules for members of S
                    for (int v : sidx) {
                        if (d.out_deg(v) > n - t + k && !((ymask >> v) & 1)) ok = false;
                        if (d.in_deg(v) > t + k && ((ymask >> v) & 1)) ok = false;
                    }
                }
                if (ok) {
                    solver::ValidTriple vt;
                    vt.t = t;
                    vt.y = VertexSet(n);
                    vt.s = VertexSet(n);
                    for (int v : yidx) vt.y.set(v);
                    for (int v : sidx) vt.s.set(v);
                    out.push_back(std::move(vt));
                }
                more_s = size > 0 && next_combination(sidx, n);
            }
        }
        more_y = t > 0 && next_combination(yidx, n);
    }

    std::sort(out.begin(), out.end());
    assert(std::adjacent_find(out.begin(), out.end()) == out.end());
    return out;
}

} // namespace dcoc::oracle
