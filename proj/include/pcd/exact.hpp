#pragma once

#include "pcd/certificates.hpp"
#include "pcd/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcd {

// Complete decision/optimization procedures. These are the ground-truth
// oracles: a "no" is only returned after exhausting the search space,
// and a deadline turns the answer into "unknown", never into a guess.

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

struct SolveStats {
    std::uint64_t nodes = 0;
    double ms = 0.0;
    bool exhaustive = true;  // false when a guardrail/deadline/heuristic cut the search
};

struct SolveOptions {
    std::optional<double> deadline_ms;
    bool force = false;  // override instance-size guardrails
};

template <class Cert>
struct SolveResult {
    Verdict verdict = Verdict::unknown;
    std::optional<Cert> certificate;
    SolveStats stats;
    std::string note;  // guardrail refusal / timeout explanation
};

// Vertex-disjoint family of substructures plus the uncovered remainder.
struct C43Copy {
    std::vector<Vertex> vertices;  // 4 labels, ascending
    Edge witness1, witness2;       // two distinct host edges inside `vertices`
};

struct Tiling {
    enum class Kind { loose_path, c43 };

    Kind kind = Kind::c43;
    std::vector<C43Copy> c43s;     // members when kind == c43
    std::vector<LooseWalk> paths;  // members when kind == loose_path
    std::vector<Vertex> uncovered;
    bool optimal = true;  // false marks a heuristic bound, not an optimum

    std::size_t size() const { return kind == Kind::c43 ? c43s.size() : paths.size(); }
};

std::vector<Vertex> tiling_covered(const Tiling& t);
ValidationReport validate_tiling(const Hypergraph& h, const Tiling& t);
// |uncovered| <= alpha * n
bool is_alpha_deficient(const Tiling& t, double alpha, int n);

// Maximum-cardinality matching via branch and bound (greedy lower bound,
// vertex-count upper bound).
SolveResult<Matching> max_matching(const Hypergraph& h, const SolveOptions& opts = {});

// Perfect matching decision; "no" implies r does not divide n or the
// exhaustive cover search failed.
SolveResult<Matching> has_perfect_matching(const Hypergraph& h, const SolveOptions& opts = {});

// Backtracking over cyclic vertex orders restricted to pairs of positive
// co-degree, with an incremental system-of-distinct-representatives check
// assigning distinct host edges to consecutive pairs.
SolveResult<BergeCycle> find_berge_hamiltonian_cycle(const Hypergraph& h,
                                                     const SolveOptions& opts = {});

// Backtracking over block sequences anchored at vertex 0.
SolveResult<LooseWalk> find_loose_hamiltonian_cycle(const Hypergraph& h,
                                                    const SolveOptions& opts = {});

// Maximum family of vertex-disjoint C_4^3 copies (4-sets spanning >= 2
// edges); exhaustive branch and bound. Requires r = 3.
SolveResult<Tiling> max_c43_tiling(const Hypergraph& h, const SolveOptions& opts = {});

// Among tilings by at most max_paths vertex-disjoint loose paths, one
// minimizing the uncovered count. Exhaustive (subset DP) for n <= 12;
// greedy beyond, flagged as a bound. Requires r = 3.
SolveResult<Tiling> best_path_tiling(const Hypergraph& h, int max_paths,
                                     const SolveOptions& opts = {});

// --- bipartite matching with Hall witnesses ---

struct BipartiteGraph {
    int x_size = 0;
    int y_size = 0;
    std::vector<std::vector<int>> adj;  // adj[x] = ascending list of y-neighbours

    BipartiteGraph() = default;
    BipartiteGraph(int xs, int ys) : x_size(xs), y_size(ys), adj(static_cast<std::size_t>(xs)) {}
    void add_edge(int x, int y);
};

struct HallWitness {
    std::vector<int> witness_x;     // W with |N(W)| < |W|
    std::vector<int> neighborhood;  // N(W)
};

struct XSaturatingResult {
    // Exactly one of the two is set.
    std::optional<std::vector<int>> match;  // match[x] = matched y
    std::optional<HallWitness> witness;
};

XSaturatingResult x_saturating_matching(const BipartiteGraph& b);

} // namespace pcd
