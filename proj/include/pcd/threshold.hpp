#pragma once

#include "pcd/exact.hpp"
#include "pcd/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pcd {

enum class StructureKind { perfect_matching, berge_hc, loose_hc, hamiltonian_cycle };

std::optional<StructureKind> parse_structure(const std::string& name);
const char* to_string(StructureKind s);

// divisibility screen: thresholds are only defined at feasible n
bool structure_feasible(StructureKind s, int r, int n);

Verdict has_structure(const Hypergraph& h, StructureKind s, const SolveOptions& opts = {});

// ---- isomorph-free enumeration ----

// exhaustive mode only for (r=3, n<=6) and (r=2, n<=8)
bool enumeration_exhaustive_ok(int r, int n);

struct EnumOptions {
    long long floor_t = 0;      // emit only delta_pos >= floor_t
    bool skip_isolated = true;  // emit only hypergraphs without isolated vertices
};

struct EnumSummary {
    std::uint64_t canonical_total = 0;  // representatives visited before filters
    std::uint64_t emitted = 0;
};

// Streams canonical representatives (lex-min edge-index sequence over all
// vertex permutations) by orderly generation: children extend by a larger
// edge index and only canonical children are expanded. The callback may
// return false to stop early.
EnumSummary enumerate_hypergraphs(int r, int n, const EnumOptions& opts,
                                  const std::function<bool(const Hypergraph&)>& callback);

// lex-min edge-index mask over all vertex permutations (test hook)
std::uint64_t canonical_form(int r, int n, std::uint64_t edge_mask);

// Seeded stream for sizes beyond the exhaustive limits: samples across
// the density sweep {0.3, 0.5, 0.7, 0.9}, filtered like the exhaustive
// stream. Identical seed, identical stream.
EnumSummary enumerate_hypergraphs_sampled(int r, int n, const EnumOptions& opts,
                                          std::uint64_t seed, int samples_per_density,
                                          const std::function<bool(const Hypergraph&)>& callback);

// ---- threshold determination ----

struct ThresholdReport {
    int r = 0;
    int n = 0;
    StructureKind structure = StructureKind::perfect_matching;
    long long threshold_lower = 0;  // == upper when exact
    long long threshold_upper = 0;
    bool exact = false;
    std::string method;  // "exhaustive" | "sampled"
    std::optional<Hypergraph> witness;  // delta_pos = threshold-1, no structure
    long long witness_delta_pos = 0;
    std::uint64_t instances_examined = 0;
    std::uint64_t counterexamples = 0;
};

// One exhaustive scan over canonical representatives without isolated
// vertices: the threshold is 1 + the largest counterexample delta_pos.
ThresholdReport exact_threshold(int r, int n, StructureKind s);

// Seeded sampling beyond the exhaustive limits; reports a bracket.
ThresholdReport sampled_threshold(int r, int n, StructureKind s, std::uint64_t seed,
                                  int samples_per_density);

// ---- tightness experiments ----

struct TightnessRow {
    int n = 0;
    bool regime_empty = false;          // the bound exceeds every possible delta_pos
    long long construction_delta_pos = 0;
    double threshold_formula = 0.0;
    std::string construction_verdict;   // solver verdict on the witness construction
    bool construction_ok = false;       // absence confirmed
    int samples_tested = 0;
    int samples_with_structure = 0;
    std::vector<std::string> discrepancies;
};

struct TightnessReport {
    std::string theorem;  // claim id: pm-3uniform | pm-runiform | berge-hc | loose-hc
    int r = 0;
    StructureKind structure = StructureKind::perfect_matching;
    std::vector<TightnessRow> rows;
};

TightnessReport tightness_report(const std::string& claim_id, int r, int n_min, int n_max,
                                 std::uint64_t seed, int samples_per_n = 10);

} // namespace pcd
