#ifndef DCOC_GUESS_HPP
#define DCOC_GUESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcoc/digraph.hpp"
#include "dcoc/instance.hpp"
#include "dcoc/oracle.hpp"
#include "dcoc/vertex_set.hpp"

namespace dcoc::guess {

using Rational = boost::multiprecision::cpp_rational;

// Randomized strong-component guessing for general digraphs. A guess keeps
// X0 and adds every other vertex independently with probability
// p = ell/(ell+1); it succeeds when it captures the full strong component
// of every X0 vertex in D - X while avoiding X entirely.
struct GuessConfig {
    int ell = 1;
    int k = 0;
    uint64_t seed = 1;

    // p = 1 - 1/(ell+1), kept as an exact rational
    uint64_t p_num() const { return static_cast<uint64_t>(ell); }
    uint64_t p_den() const { return static_cast<uint64_t>(ell) + 1; }
};

// One sample from a fresh SplitMix64(cfg.seed); X0 is always included.
VertexSet sample_guess(const Digraph& d, const VertexSet& x0, const GuessConfig& cfg);

struct GuessOutcome {
    VertexSet s;          // sampled set, always a superset of X0
    bool success = false; // both success conditions against the reference X
};

// sample_guess plus the success evaluation in one step
GuessOutcome guess_once(const Digraph& d, const VertexSet& x, const VertexSet& x0,
                        const GuessConfig& cfg);

// Both success conditions, computed structurally from the components of
// D - X. Throws Error("overlap") when x and x0 intersect.
bool is_success(const Digraph& d, const VertexSet& x, const VertexSet& x0, const VertexSet& s);

// Exactly p^{|Y \ X0|} (1-p)^{|X|} where Y is the union of the strong
// components of the X0 vertices in D - X.
Rational exact_success_probability(const Digraph& d, const VertexSet& x, const VertexSet& x0, int ell);

// The guarantee a successful guess buys: for every v in X0, the strong
// component of v in D[S] equals its strong component in D - X.
bool component_fix_check(const Digraph& d, const VertexSet& x, const VertexSet& x0, const VertexSet& s);

struct TrialReport {
    long long trials = 0;
    long long successes = 0;
    double frequency = 0;
    Rational exact;
    double sigma = 0;          // binomial sigma of the frequency estimate
    bool within_3_sigma = true;
    long long fix_check_failures = 0;
};

// Monte-Carlo harness; trial i draws from SplitMix64(seed + i), so the
// aggregate is identical whether trials run serially or in parallel.
TrialReport run_trials(const Digraph& d, const VertexSet& x, const VertexSet& x0, int ell,
                       long long trials, uint64_t seed, bool parallel = true,
                       bool fix_check = true);

enum class FamilyMode { randomized, exhaustive };

// Family F of subsets of 0..n-1 such that every disjoint (A, B) with
// |A| = r, |B| = s has some S in F with A inside S and B outside it.
// Exhaustive mode returns all r-subsets; randomized mode samples sets with
// per-element probability r/(r+s) until every (A, B) pair is covered or
// the size budget 3 * C(r+s, r) * (r+s) * ln n is spent (then it fails
// with Error("family_budget")). Verification enumerates all pairs, hence
// the n <= 20 guard.
std::vector<VertexSet> candidate_family(int n, int r, int s, FamilyMode mode, uint64_t seed = 1);

bool family_covers_all(int n, int r, int s, const std::vector<VertexSet>& family);

// Convenience exact path for general digraphs, backed by the exhaustive
// oracle; refuses n > 24. Returns nothing when no solution of size <= k
// exists.
std::optional<oracle::OracleResult> solve_general(const Instance& inst);

} // namespace dcoc::guess

#endif
