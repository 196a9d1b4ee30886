#ifndef DCOC_ORACLE_HPP
#define DCOC_ORACLE_HPP

#include <optional>
#include <vector>

#include "dcoc/digraph.hpp"
#include "dcoc/solver.hpp"
#include "dcoc/vertex_set.hpp"

namespace dcoc::oracle {

// Exhaustive ground truth. Deliberately definition-level: no pruning that
// could diverge from the problem statement.
struct OracleResult {
    int optimum = 0;
    VertexSet witness;
};

// Hard size guard; beyond this the subset space is refused outright.
inline constexpr int kMaxOracleN = 24;

// Search deletion sets by increasing size, lexicographic within a size;
// first hit wins, so witnesses are deterministic. cap is clamped to n.
// Throws Error("oracle_guard") when n > kMaxOracleN.
std::optional<OracleResult> optimal_coc(const Digraph& d, int ell, int cap, bool parallel = true);

// ell = 1 special case: minimum directed feedback vertex set.
std::optional<OracleResult> min_feedback_vertex_set(const Digraph& d, int cap, bool parallel = true);

// All t-valid triples straight from the five-property definition: every
// partition with |Y| = t against every S of size <= k, minimality checked
// by one-removal. Guarded to n <= 16.
std::vector<solver::ValidTriple> brute_force_triples(const Digraph& d, int t, int k);

} // namespace dcoc::oracle

#endif
