#ifndef DCOC_INSTANCE_HPP
#define DCOC_INSTANCE_HPP

#include <utility>

#include "dcoc/digraph.hpp"
#include "dcoc/errors.hpp"
#include "dcoc/scc.hpp"

namespace dcoc {

// Problem instance (D, ell, k): delete at most k vertices so that every
// strong component of what remains has at most ell vertices.
struct Instance {
    Digraph digraph;
    int ell = 1;
    int k = 0;

    Instance(Digraph d, int ell_, int k_) : digraph(std::move(d)), ell(ell_), k(k_) {
        if (ell < 1) fail("invalid_ell", "ell must be at least 1");
        if (k < 0) fail("bad_args", "k must be non-negative");
    }
};

inline bool verify_solution(const Instance& inst, const VertexSet& x) {
    return x.count() <= inst.k && mco(inst.digraph, x) <= inst.ell;
}

} // namespace dcoc

#endif
