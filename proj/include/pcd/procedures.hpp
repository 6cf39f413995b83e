#pragma once

#include "pcd/certificates.hpp"
#include "pcd/exact.hpp"
#include "pcd/hypergraph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcd {

// Algorithms extracted from constructive proofs. Inside a theorem's
// hypotheses they must succeed; outside they may return a structured
// failure naming the stage that gave out. `hypotheses_met` is recorded
// up front so out-of-regime failures are never counted against a theorem.

struct ProcedureFailure {
    std::string stage;
    std::string detail;
};

struct StageLog {
    std::vector<std::string> entries;
    void note(std::string s) { entries.push_back(std::move(s)); }
};

template <class Cert>
struct ProcedureResult {
    bool hypotheses_met = false;
    std::optional<Cert> certificate;
    std::optional<ProcedureFailure> failure;
    StageLog stage_log;

    bool ok() const { return certificate.has_value(); }
};

// ---- matching augmentation (3-uniform and general r) ----

struct AugmentationState {
    Matching matching;
    std::vector<Vertex> unmatched;                  // U = V(H) \ V(M), ascending
    std::vector<std::vector<Vertex>> candidate_sets;  // S_1..S_k, disjoint subsets of U
    // (candidate index, matching-edge index) -> f(S_i, e)
    std::map<std::pair<int, int>, int> f_table;
};

AugmentationState make_augmentation_state(const Hypergraph& h, Matching m);

// f(S, e) = |{ v in e : S + v lies inside some host edge }|
int f_value(const Hypergraph& h, const std::vector<Vertex>& s, const Edge& e);

// Recomputes candidate-set f values; used by the state invariant check.
void refresh_f_table(const Hypergraph& h, AugmentationState& state);

// One augmentation step of the 3-uniform perfect-matching proof: the
// disjoint-pair swap, then the M-extender search (three low-U-degree
// vertices first, then the cherry case), then completing two disjoint
// edges inside U plus one matching edge. Returns a strictly larger
// matching or nothing.
std::optional<Matching> augment_step_3(const Hypergraph& h, const AugmentationState& state);

// Greedy maximal matching + repeated augment_step_3 until perfect or stuck.
ProcedureResult<Matching> perfect_matching_via_extenders(const Hypergraph& h);

// One round of the r-uniform augmentation: grow candidate sets greedily
// inside U, release a matching edge found through the auxiliary bipartite
// matching whenever the minimum-size sets stall, and finish with r
// disjoint edges replacing at most r-1 matching edges.
std::optional<Matching> augment_step_r(const Hypergraph& h, const AugmentationState& state);

// ---- Hamiltonian constructions ----

// Rotation-extension construction; always succeeds when the minimum
// degree is at least n/2, best effort below.
ProcedureResult<BergeCycle> dirac_cycle(const Hypergraph& g);

// Inductive lift: strengthened Berge Hamiltonian cycle of the shadow
// graph, then each (r-1)-edge extended to an r-edge avoiding the at most
// 2r-4 forbidden vertices.
ProcedureResult<BergeCycle> berge_lift(const Hypergraph& h);

// ---- absorbing machinery (3-uniform) ----

struct Absorber {
    LooseWalk path;                     // 7 vertices for a pair absorber, longer when assembled
    std::vector<std::size_t> windows;   // offsets of embedded 7-vertex absorber windows

    Vertex front() const { return path.vertices.front(); }
    Vertex back() const { return path.vertices.back(); }
};

// v2-x-v4 and v4-y-v6 are host edges for the window starting at `offset`.
bool absorbs(const Hypergraph& h, const LooseWalk& walk, std::size_t offset, Vertex x, Vertex y);

// Enumerates 7-vertex loose paths absorbing {x, y} in the proof's
// selection order, up to `limit` of them.
std::vector<Absorber> enumerate_absorbers(const Hypergraph& h, Vertex x, Vertex y,
                                          std::uint64_t limit);

// Pairs up U and reroutes each pair through a free absorber window;
// the rewritten walk keeps the original endpoints and covers V(P) + U.
ProcedureResult<LooseWalk> absorb(const Hypergraph& h, const Absorber& a,
                                  std::vector<Vertex> u);

// Disjoint connecting triples (x_i, y_i, z_i) inside `allowed` with
// {a_i, x_i, y_i} and {y_i, z_i, b_i} host edges. Exhaustive search:
// an empty answer is a true negative.
std::optional<std::vector<std::array<Vertex, 3>>> connect_pairs(
    const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
    const std::vector<Vertex>& allowed);

struct Reservoir {
    std::vector<Vertex> vertices;
    double gamma = 0.0;
    long long capacity = 0;  // floor(gamma^3 n / 12) pairs
    int candidates_tried = 0;
    int systems_checked = 0;
};

// Seeded empirical realization: candidate sets of size floor(gamma n) are
// accepted once a budgeted sample of pair systems all connect inside R.
ProcedureResult<Reservoir> build_reservoir(const Hypergraph& h, double gamma,
                                           std::uint64_t seed);

// Switching-configuration augmentation for C43 tilings: direct extensions
// inside the uncovered set, strict +1 gains when one tile admits two
// vertex-disjoint switching configurations, and the equal-size high
// S-degree pair relocation when it unlocks a gain. Never shrinks.
Tiling c43_switch_augment(const Hypergraph& h, const Tiling& tiling);

struct AssembleOptions {
    double epsilon = 0.2;
    std::uint64_t seed = 1;
    double gamma = 0.2;                      // reservoir fraction
    double absorb_capacity_fraction = 0.0;   // 0 = epsilon^6 / 1024 default
    int max_paths = 8;
};

// Best-effort pipeline: absorbing path, reservoir, path tiling of the
// remainder, cycle closure through the reservoir, absorption of leftovers.
ProcedureResult<LooseWalk> assemble_loose_hc(const Hypergraph& h, const AssembleOptions& opts);

} // namespace pcd
