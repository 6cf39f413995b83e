#pragma once

#include "pcd/hypergraph.hpp"

#include <string>
#include <vector>

namespace pcd {

// Certificate validation. Invalidity is data (a report), not an error.
struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
    bool hamiltonian = false;   // structure spans all n vertices
    bool strengthened = false;  // Berge extra: e_i meets {v_j, v_j+1} in <= 1 vertex for i != j

    void fail(std::string msg) {
        valid = false;
        violations.push_back(std::move(msg));
    }
};

struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
    std::vector<Vertex> covered() const;
    bool is_perfect(const Hypergraph& host) const;
};

// (v_1, e_1, v_2, e_2, ..., v_k, e_k, v_1): e_i contains v_i and v_{i+1},
// all vertices pairwise distinct, all edges pairwise distinct.
struct BergeCycle {
    std::vector<Vertex> vertices;
    std::vector<Edge> cycle_edges;

    std::size_t length() const { return vertices.size(); }
};

// Loose path / cycle given by its vertex order; consecutive blocks of r
// vertices overlap in exactly one vertex (path) or wrap cyclically (cycle).
struct LooseWalk {
    enum class Kind { path, cycle };

    std::vector<Vertex> vertices;
    Kind kind = Kind::path;
    int r = 3;

    std::size_t num_blocks() const;
    // i-th defining r-set, in walk order (cyclic for cycles).
    std::vector<Vertex> block(std::size_t i) const;
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

ValidationReport validate_matching(const Hypergraph& h, const Matching& m);
ValidationReport validate_berge_cycle(const Hypergraph& h, const BergeCycle& c);
ValidationReport validate_loose_walk(const Hypergraph& h, const LooseWalk& w);

} // namespace pcd
