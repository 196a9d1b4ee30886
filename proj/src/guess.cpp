#include "dcoc/guess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "dcoc/errors.hpp"
#include "dcoc/rng.hpp"
#include "dcoc/scc.hpp"

namespace dcoc::guess {

namespace {

using boost::multiprecision::cpp_int;

void require_disjoint(const VertexSet& x, const VertexSet& x0) {
    if (x.intersects(x0)) fail("overlap", "X and X0 must be disjoint");
}

// union of the strong components (in D - x) of the vertices of x0
VertexSet component_union(const Digraph& d, const VertexSet& x, const VertexSet& x0) {
    SccPartition p = scc_partition(d, &x);
    std::vector<char> marked(static_cast<size_t>(p.count), 0);
    x0.for_each([&](int v) { marked[static_cast<size_t>(p.comp[static_cast<size_t>(v)])] = 1; });
    VertexSet y(d.n());
    for (int v = 0; v < d.n(); ++v) {
        int c = p.comp[static_cast<size_t>(v)];
        if (c != -1 && marked[static_cast<size_t>(c)]) y.set(v);
    }
    return y;
}

VertexSet sample_with(const Digraph& d, const VertexSet& x0, int ell, SplitMix64& rng) {
    VertexSet s = x0;
    const uint64_t num = static_cast<uint64_t>(ell);
    const uint64_t den = num + 1;
    for (int v = 0; v < d.n(); ++v) {
        if (x0.test(v)) continue;
        if (rng.chance(num, den)) s.set(v);
    }
    return s;
}

uint64_t comb64(int n, int r) {
    if (r < 0 || r > n) return 0;
    uint64_t num = 1;
    for (int i = 0; i < r; ++i) num = num * static_cast<uint64_t>(n - i) / static_cast<uint64_t>(i + 1);
    return num;
}

struct MaskPair {
    uint32_t a = 0;
    uint32_t b = 0;
};

// all disjoint (A, B) pairs with |A| = r, |B| = s over 0..n-1, as masks
std::vector<MaskPair> all_pairs(int n, int r, int s) {
    std::vector<MaskPair> pairs;
    std::vector<int> aidx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) aidx[static_cast<size_t>(i)] = i;
    auto next_comb = [](std::vector<int>& idx, int limit) {
        const int sz = static_cast<int>(idx.size());
        int i = sz - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == limit - sz + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < sz; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        return true;
    };
    bool more_a = true;
    while (more_a) {
        uint32_t amask = 0;
        for (int v : aidx) amask |= uint32_t{1} << v;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!((amask >> v) & 1)) rest.push_back(v);
        std::vector<int> bidx(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) bidx[static_cast<size_t>(i)] = i;
        bool more_b = true;
        while (more_b) {
            uint32_t bmask = 0;
            for (int i : bidx) bmask |= uint32_t{1} << rest[static_cast<size_t>(i)];
            pairs.push_back({amask, bmask});
            more_b = s > 0 && next_comb(bidx, static_cast<int>(rest.size()));
        }
        more_a = r > 0 && next_comb(aidx, n);
    }
    return pairs;
}

uint32_t set_to_mask(const VertexSet& s) {
    uint32_t m = 0;
    s.for_each([&](int v) { m |= uint32_t{1} << v; });
    return m;
}

} // namespace

VertexSet sample_guess(const Digraph& d, const VertexSet& x0, const GuessConfig& cfg) {
    if (cfg.ell < 1) fail("invalid_ell", "ell must be at least 1");
    SplitMix64 rng(cfg.seed);
    return sample_with(d, x0, cfg.ell, rng);
}

bool is_success(const Digraph& d, const VertexSet& x, const VertexSet& x0, const VertexSet& s) {
    require_disjoint(x, x0);
    if (s.intersects(x)) return false;
    VertexSet y = component_union(d, x, x0);
    return y.is_subset_of(s);
}

GuessOutcome guess_once(const Digraph& d, const VertexSet& x, const VertexSet& x0,
                        const GuessConfig& cfg) {
    GuessOutcome out;
    out.s = sample_guess(d, x0, cfg);
    out.success = is_success(d, x, x0, out.s);
    return out;
}

Rational exact_success_probability(const Digraph& d, const VertexSet& x, const VertexSet& x0, int ell) {
    if (ell < 1) fail("invalid_ell", "ell must be at least 1");
    require_disjoint(x, x0);
    VertexSet y = component_union(d, x, x0);
    const int a = (y - x0).count(); // vertices of Y left to chance
    const int b = x.count();
    cpp_int num = boost::multiprecision::pow(cpp_int(ell), static_cast<unsigned>(a));
    cpp_int den = boost::multiprecision::pow(cpp_int(ell + 1), static_cast<unsigned>(a + b));
    return Rational(num, den);
}

bool component_fix_check(const Digraph& d, const VertexSet& x, const VertexSet& x0, const VertexSet& s) {
    VertexSet not_s = ~s;
    SccPartition in_ds = scc_partition(d, &not_s); // components of D[S]
    SccPartition in_dx = scc_partition(d, &x);

    bool ok = true;
    x0.for_each([&](int v) {
        if (!ok) return;
        if (!s.test(v)) {
            ok = false;
            return;
        }
        const int cs = in_ds.comp[static_cast<size_t>(v)];
        const int cx = in_dx.comp[static_cast<size_t>(v)];
        for (int w = 0; w < d.n(); ++w) {
            bool member_s = s.test(w) && in_ds.comp[static_cast<size_t>(w)] == cs;
            bool member_x = !x.test(w) && in_dx.comp[static_cast<size_t>(w)] == cx;
            if (member_s != member_x) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

TrialReport run_trials(const Digraph& d, const VertexSet& x, const VertexSet& x0, int ell,
                       long long trials, uint64_t seed, bool parallel, bool fix_check) {
    if (ell < 1) fail("invalid_ell", "ell must be at least 1");
    require_disjoint(x, x0);

    TrialReport rep;
    rep.trials = trials;
    rep.exact = exact_success_probability(d, x, x0, ell);

    const VertexSet y = component_union(d, x, x0);
    long long successes = 0;
    long long fix_failures = 0;

#pragma omp parallel for schedule(static) reduction(+ : successes, fix_failures) if (parallel)
    for (long long i = 0; i < trials; ++i) {
        SplitMix64 rng = SplitMix64::for_trial(seed, static_cast<uint64_t>(i));
        VertexSet s = sample_with(d, x0, ell, rng);
        if (!s.intersects(x) && y.is_subset_of(s)) {
            ++successes;
            if (fix_check && !component_fix_check(d, x, x0, s)) ++fix_failures;
        }
    }

    rep.successes = successes;
    rep.fix_check_failures = fix_failures;
    if (trials > 0) {
        rep.frequency = static_cast<double>(successes) / static_cast<double>(trials);
        const double q = rep.exact.convert_to<double>();
        rep.sigma = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
        rep.within_3_sigma = std::abs(rep.frequency - q) <= 3.0 * rep.sigma;
    }
    return rep;
}

bool family_covers_all(int n, int r, int s, const std::vector<VertexSet>& family) {
    if (n > 20) fail("family_guard", "exhaustive pair verification limited to n <= 20");
    std::vector<uint32_t> masks;
    masks.reserve(family.size());
    for (const auto& f : family) masks.push_back(set_to_mask(f));
    for (const MaskPair& p : all_pairs(n, r, s)) {
        bool covered = false;
        for (uint32_t m : masks)
            if ((p.a & ~m) == 0 && (p.b & m) == 0) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::vector<VertexSet> candidate_family(int n, int r, int s, FamilyMode mode, uint64_t seed) {
    if (r < 0 || s < 0 || r + s > n) fail("bad_args", "need r + s <= n");
    if (r == 0) return {VertexSet(n)};
    if (s == 0) return {VertexSet::full(n)};
    if (n > 20) fail("family_guard", "cover-free family construction limited to n <= 20");

    if (mode == FamilyMode::exhaustive) {
        // every r-subset covers the pairs whose A it equals
        std::vector<VertexSet> family;
        std::vector<int> idx(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
        for (;;) {
            family.push_back(VertexSet::from(n, idx));
            int i = r - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
        return family;
    }

    const double budget_f = 3.0 * static_cast<double>(comb64(r + s, r)) * (r + s) *
                            std::log(static_cast<double>(std::max(n, 2)));
    const long long budget = static_cast<long long>(std::ceil(budget_f));

    std::vector<MaskPair> uncovered = all_pairs(n, r, s);
    std::vector<VertexSet> family;
    SplitMix64 rng(seed);
    for (long long step = 0; step < budget && !uncovered.empty(); ++step) {
        VertexSet cand(n);
        uint32_t cmask = 0;
        for (int v = 0; v < n; ++v) {
            if (rng.chance(static_cast<uint64_t>(r), static_cast<uint64_t>(r + s))) {
                cand.set(v);
                cmask |= uint32_t{1} << v;
            }
        }
        family.push_back(std::move(cand));
        std::erase_if(uncovered,
                      [&](const MaskPair& p) { return (p.a & ~cmask) == 0 && (p.b & cmask) == 0; });
    }
    if (!uncovered.empty())
        fail("family_budget", "randomized family did not cover all pairs within its size budget of " +
                                  std::to_string(budget) + " sets");
    return family;
}

std::optional<oracle::OracleResult> solve_general(const Instance& inst) {
    if (inst.digraph.n() > oracle::kMaxOracleN)
        fail("oracle_guard", "general solver delegates to the exhaustive oracle, limited to n <= " +
                                 std::to_string(oracle::kMaxOracleN));
    return oracle::optimal_coc(inst.digraph, inst.ell, std::min(inst.k, inst.digraph.n()));
}

} // namespace dcoc::guess
