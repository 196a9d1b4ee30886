#ifndef DCOC_SCC_HPP
#define DCOC_SCC_HPP

#include <vector>

#include "dcoc/digraph.hpp"
#include "dcoc/vertex_set.hpp"

namespace dcoc {

// Strong-component partition in acyclic ordering: every arc goes from a
// component of index i to one of index j with i <= j. comp[v] == -1 for
// removed vertices.
struct SccPartition {
    int count = 0;
    std::vector<int> comp;
    std::vector<int> sizes;
};

// iterative Tarjan; safe at n = 10^5 and beyond
SccPartition scc_partition(const Digraph& d, const VertexSet* removed = nullptr);

std::vector<VertexSet> strong_components(const Digraph& d);
std::vector<VertexSet> strong_components_excluding(const Digraph& d, const VertexSet& removed);

// maximum component order of d - removed; 0 once every vertex is removed
int mco(const Digraph& d, const VertexSet& removed);
int mco(const Digraph& d);

} // namespace dcoc

#endif
