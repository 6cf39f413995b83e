#pragma once

#include "pcd/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pcd {

// Structure kinds a construction can claim to lack, with the size regime
// that forces the absence. Claims are data; solvers verify them.
struct AbsenceClaim {
    std::string structure;  // "perfect-matching" | "berge-hc" | "loose-hc"
    std::string regime;     // human-readable condition that triggered the claim
};

struct ConstructionSheet {
    std::string name;
    int r = 0;
    int n = 0;
    int u_size = 0;  // 0 when the construction has no U/V split
    int v_size = 0;
    long long claimed_delta_pos = 0;
    std::vector<AbsenceClaim> claimed_absences;
};

// Two-class construction: every (r-1)-set inside U is universal and V is
// strongly independent, i.e. edges are exactly the r-sets with at least
// r-1 vertices in U. U takes labels 0..n-v_size-1.
std::pair<Hypergraph, ConstructionSheet> make_huv(int r, int n, int v_size);

Hypergraph complete(int r, int n);

// Disjoint union of two complete 3-graphs on n/2 vertices each.
std::pair<Hypergraph, ConstructionSheet> two_cliques(int n);

// The k defining edges of an r-uniform loose cycle on k(r-1) vertices.
Hypergraph loose_cycle_graph(int r, int k);

// Each r-set kept independently with probability edge_probability, then
// pruned to the floor t. Deterministic for a fixed seed.
Hypergraph sample_with_floor(int r, int n, long long t, double edge_probability,
                             std::uint64_t seed);

} // namespace pcd
