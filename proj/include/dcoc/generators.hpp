#ifndef DCOC_GENERATORS_HPP
#define DCOC_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dcoc/digraph.hpp"
#include "dcoc/vertex_set.hpp"

namespace dcoc::gen {

// Fixed strong tournament H_i: transitive on 0..i-1 with the arc 0 -> i-1
// replaced by i-1 -> 0 (a Hamiltonian cycle plus forward arcs). i = 1 is a
// single vertex; no strong tournament exists on 2 vertices.
Digraph strong_tournament(int i);

// Chain of strong_tournament blocks with every cross arc oriented from the
// earlier block to the later one; the blocks are exactly the strong
// components, in order. Block sizes must be 1 or >= 3.
Digraph layered_tournament(const std::vector<int>& sizes);

Digraph transitive_tournament(int n);

// Reverse one simple arc u -> v (precondition: no digon on the pair).
Digraph flip_one_arc(const Digraph& d, int u, int v);

// Seed-deterministic random families; same arguments, same edge list.
Digraph random_tournament(int n, uint64_t seed);
Digraph random_semicomplete(int n, double digon_prob, uint64_t seed);

// Layered base plus extra_k fresh vertices wired to everything with random
// orientations. Deleting the fresh vertices restores the layered base, so
// (digraph, ell = max block, k = extra_k) is a YES instance with the fresh
// vertices as a planted witness.
struct PlantedInstance {
    Digraph digraph;
    int ell = 1;
    int k = 0;
    VertexSet planted;
};

PlantedInstance planted_instance(const std::vector<int>& sizes, int extra_k, uint64_t seed);

// Spec-string front end: "family:key=value,...". Families:
//   strong:n=7
//   layered:sizes=3+3+5
//   transitive:n=5
//   tournament:n=10,seed=1
//   semicomplete:n=10,digon=0.25,seed=1
//   planted:sizes=3+3,extra=1,seed=1
// A seed key in the spec overrides default_seed.
Digraph generate(const std::string& spec, uint64_t default_seed = 1);

} // namespace dcoc::gen

#endif
