#include "pcd/threshold.hpp"

#include "pcd/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pcd {

std::optional<StructureKind> parse_structure(const std::string& name) {
    if (name == "pm" || name == "perfect-matching") return StructureKind::perfect_matching;
    if (name == "berge-hc") return StructureKind::berge_hc;
    if (name == "loose-hc") return StructureKind::loose_hc;
    if (name == "hamiltonian-cycle" || name == "hc") return StructureKind::hamiltonian_cycle;
    return std::nullopt;
}

const char* to_string(StructureKind s) {
    switch (s) {
        case StructureKind::perfect_matching: return "perfect-matching";
        case StructureKind::berge_hc: return "berge-hc";
        case StructureKind::loose_hc: return "loose-hc";
        default: return "hamiltonian-cycle";
    }
}

bool structure_feasible(StructureKind s, int r, int n) {
    switch (s) {
        case StructureKind::perfect_matching: return n > 0 && n % r == 0;
        case StructureKind::loose_hc: return r >= 2 && n > 0 && n % (r - 1) == 0 && n / (r - 1) >= 2 && !(r == 2 && n < 3);
        case StructureKind::berge_hc: return n >= 2;
        default: return r == 2 && n >= 3;
    }
}

Verdict has_structure(const Hypergraph& h, StructureKind s, const SolveOptions& opts) {
    switch (s) {
        case StructureKind::perfect_matching: return has_perfect_matching(h, opts).verdict;
        case StructureKind::loose_hc: return find_loose_hamiltonian_cycle(h, opts).verdict;
        case StructureKind::berge_hc:
        case StructureKind::hamiltonian_cycle:
            return find_berge_hamiltonian_cycle(h, opts).verdict;
    }
    return Verdict::unknown;
}

// ------------------------------------------------------------ enumeration

bool enumeration_exhaustive_ok(int r, int n) {
    if (r == 3) return n <= 6;
    if (r == 2) return n <= 8;
    return false;
}

namespace {

struct EnumContext {
    int r, n;
    std::vector<Edge> all_edges;                 // lex order; index = bit position
    std::vector<std::vector<std::uint8_t>> perm_edge;  // per permutation, edge-index remap

    EnumContext(int rr, int nn) : r(rr), n(nn) {
        std::vector<Vertex> s(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = i;
        if (r <= n) {
            for (;;) {
                all_edges.push_back(s);
                int i = r - 1;
                while (i >= 0 && s[static_cast<std::size_t>(i)] == n - r + i) --i;
                if (i < 0) break;
                ++s[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < r; ++j)
                    s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        if (all_edges.size() > 63)
            throw std::invalid_argument("enumeration: edge universe exceeds 63 bits");

        // rank lookup for r-sets so each permutation becomes an index remap
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        auto rank_of = [&](Edge e) {
            std::sort(e.begin(), e.end());
            auto it = std::lower_bound(all_edges.begin(), all_edges.end(), e);
            return static_cast<std::uint8_t>(it - all_edges.begin());
        };
        do {
            std::vector<std::uint8_t> remap(all_edges.size());
            for (std::size_t ei = 0; ei < all_edges.size(); ++ei) {
                Edge mapped;
                for (Vertex v : all_edges[ei]) mapped.push_back(perm[static_cast<std::size_t>(v)]);
                remap[ei] = rank_of(std::move(mapped));
            }
            perm_edge.push_back(std::move(remap));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint64_t remap(std::uint64_t mask, const std::vector<std::uint8_t>& pe) const {
        std::uint64_t out = 0;
        while (mask) {
            int b = std::countr_zero(mask);
            mask &= mask - 1;
            out |= 1ull << pe[static_cast<std::size_t>(b)];
        }
        return out;
    }

    // a < b in sorted-index-sequence order
    static bool less_seq(std::uint64_t a, std::uint64_t b) {
        std::uint64_t diff = a ^ b;
        if (!diff) return false;
        return (a & (diff & (~diff + 1))) != 0;
    }

    bool canonical(std::uint64_t mask) const {
        if (mask && !(mask & 1)) return false;  // a canonical nonempty mask holds edge {0..r-1}
        for (const auto& pe : perm_edge) {
            if (less_seq(remap(mask, pe), mask)) return false;
        }
        return true;
    }

    std::uint64_t canonical_form(std::uint64_t mask) const {
        std::uint64_t best = mask;
        for (const auto& pe : perm_edge) {
            std::uint64_t m = remap(mask, pe);
            if (less_seq(m, best)) best = m;
        }
        return best;
    }

    Hypergraph build(std::uint64_t mask) const {
        std::vector<Edge> edges;
        std::uint64_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            edges.push_back(all_edges[static_cast<std::size_t>(b)]);
        }
        return Hypergraph(r, n, std::move(edges));
    }
};

} // namespace

std::uint64_t canonical_form(int r, int n, std::uint64_t edge_mask) {
    EnumContext ctx(r, n);
    return ctx.canonical_form(edge_mask);
}

EnumSummary enumerate_hypergraphs(int r, int n, const EnumOptions& opts,
                                  const std::function<bool(const Hypergraph&)>& callback) {
    if (!enumeration_exhaustive_ok(r, n))
        throw std::invalid_argument(
            "enumerate_hypergraphs: exhaustive mode supports (r=3, n<=6) and (r=2, n<=8)");
    EnumContext ctx(r, n);
    EnumSummary summary;
    bool stop = false;

    auto emit = [&](std::uint64_t mask) {
        ++summary.canonical_total;
        Hypergraph h = ctx.build(mask);
        auto profile = degree_profile(h);
        if (opts.skip_isolated && !profile.isolated.empty()) return;
        if (profile.delta_pos_codeg < opts.floor_t) return;
        ++summary.emitted;
        if (!callback(h)) stop = true;
    };

    auto dfs = [&](auto&& self, std::uint64_t mask, int max_edge) -> void {
        emit(mask);
        if (stop) return;
        for (int e = max_edge + 1; e < static_cast<int>(ctx.all_edges.size()); ++e) {
            std::uint64_t child = mask | (1ull << e);
            if (ctx.canonical(child)) {
                self(self, child, e);
                if (stop) return;
            }
        }
    };
    dfs(dfs, 0, -1);
    return summary;
}

EnumSummary enumerate_hypergraphs_sampled(int r, int n, const EnumOptions& opts,
                                          std::uint64_t seed, int samples_per_density,
                                          const std::function<bool(const Hypergraph&)>& callback) {
    EnumSummary summary;
    const double densities[] = {0.3, 0.5, 0.7, 0.9};
    std::uint64_t stream = seed;
    for (double p : densities)
        for (int i = 0; i < samples_per_density; ++i) {
            Hypergraph h = sample_with_floor(r, n, opts.floor_t, p, stream++);
            ++summary.canonical_total;
            auto profile = degree_profile(h);
            if (opts.skip_isolated && !profile.isolated.empty()) continue;
            if (profile.delta_pos_codeg < opts.floor_t) continue;
            ++summary.emitted;
            if (!callback(h)) return summary;
        }
    return summary;
}

// -------------------------------------------------------------- thresholds

ThresholdReport exact_threshold(int r, int n, StructureKind s) {
    if (!structure_feasible(s, r, n))
        throw std::invalid_argument("exact_threshold: structure is undefined at this (r, n)");
    if (s == StructureKind::hamiltonian_cycle && r != 2)
        throw std::invalid_argument("exact_threshold: hamiltonian-cycle is the 2-graph structure");

    ThresholdReport rep;
    rep.r = r;
    rep.n = n;
    rep.structure = s;
    rep.method = "exhaustive";

    long long worst_ce = -1;
    std::optional<Hypergraph> witness;

    EnumOptions opts;
    opts.floor_t = 0;
    opts.skip_isolated = true;
    enumerate_hypergraphs(r, n, opts, [&](const Hypergraph& h) {
        ++rep.instances_examined;
        if (has_structure(h, s) == Verdict::no) {
            ++rep.counterexamples;
            long long dp = degree_profile(h).delta_pos_codeg;
            if (dp > worst_ce) {
                worst_ce = dp;
                witness = h;
            }
        }
        return true;
    });

    rep.threshold_lower = rep.threshold_upper = worst_ce + 1;
    rep.exact = true;
    rep.witness = std::move(witness);
    rep.witness_delta_pos = worst_ce < 0 ? 0 : worst_ce;
    return rep;
}

ThresholdReport sampled_threshold(int r, int n, StructureKind s, std::uint64_t seed,
                                  int samples_per_density) {
    if (!structure_feasible(s, r, n))
        throw std::invalid_argument("sampled_threshold: structure is undefined at this (r, n)");
    ThresholdReport rep;
    rep.r = r;
    rep.n = n;
    rep.structure = s;
    rep.method = "sampled";

    long long worst_ce = -1;
    std::optional<Hypergraph> witness;
    EnumOptions opts;
    enumerate_hypergraphs_sampled(r, n, opts, seed, samples_per_density,
                                  [&](const Hypergraph& h) {
                                      ++rep.instances_examined;
                                      if (has_structure(h, s) == Verdict::no) {
                                          ++rep.counterexamples;
                                          long long dp = degree_profile(h).delta_pos_codeg;
                                          if (dp > worst_ce) {
                                              worst_ce = dp;
                                              witness = h;
                                          }
                                      }
                                      return true;
                                  });

    rep.threshold_lower = worst_ce + 1;
    rep.threshold_upper = static_cast<long long>(n) - r + 1;  // the complete r-graph ceiling
    rep.exact = false;
    rep.witness = std::move(witness);
    rep.witness_delta_pos = worst_ce < 0 ? 0 : worst_ce;
    return rep;
}

// --------------------------------------------------------------- tightness

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

TightnessReport tightness_report(const std::string& claim_id, int r, int n_min, int n_max,
                                 std::uint64_t seed, int samples_per_n) {
    const std::string& claim = claim_id;

    TightnessReport rep;
    rep.theorem = claim;

    StructureKind s;
    if (claim == "pm-3uniform") {
        rep.r = 3;
        s = StructureKind::perfect_matching;
    } else if (claim == "pm-runiform") {
        rep.r = r >= 2 ? r : 4;
        s = StructureKind::perfect_matching;
    } else if (claim == "berge-hc") {
        rep.r = r >= 2 ? r : 3;
        s = rep.r == 2 ? StructureKind::hamiltonian_cycle : StructureKind::berge_hc;
    } else if (claim == "loose-hc") {
        rep.r = 3;
        s = StructureKind::loose_hc;
    } else {
        throw std::invalid_argument("tightness_report: unknown claim id " + claim_id);
    }
    rep.structure = s;

    std::uint64_t stream = seed;
    for (int n = n_min; n <= n_max; ++n) {
        if (!structure_feasible(s, rep.r, n)) continue;
        TightnessRow row;
        row.n = n;

        int v_size = 0;
        double formula = 0.0;
        if (claim == "pm-3uniform") {
            v_size = n / 3 + 1;
            formula = 2.0 * n / 3.0 - 1.0;
        } else if (claim == "pm-runiform") {
            v_size = n / rep.r + 1;
            formula = static_cast<double>(rep.r - 1) / rep.r * n + rep.r * rep.r;
        } else {
            v_size = static_cast<int>(ceil_div(n + 1, 2));
            formula = claim == "berge-hc" ? n / 2.0 - rep.r + 2.0 : n / 2.0;
        }
        row.threshold_formula = formula;
        row.regime_empty = formula > static_cast<double>(n) - rep.r + 1;

        if (n - v_size < rep.r - 1) continue;  // construction undefined here
        auto [huv, sheet] = make_huv(rep.r, n, v_size);
        row.construction_delta_pos = sheet.claimed_delta_pos;
        Verdict cv = has_structure(huv, s);
        row.construction_verdict = to_string(cv);
        row.construction_ok = cv == Verdict::no;
        if (!row.construction_ok)
            row.discrepancies.push_back("construction unexpectedly contains the structure");

        if (!row.regime_empty) {
            long long floor_t = static_cast<long long>(std::ceil(formula - 1e-9));
            const double densities[] = {0.7, 0.9};
            for (double p : densities)
                for (int i = 0; i < samples_per_n && row.samples_tested < samples_per_n; ++i) {
                    Hypergraph h = sample_with_floor(rep.r, n, floor_t, p, stream++);
                    auto profile = degree_profile(h);
                    if (h.empty() || !profile.isolated.empty() ||
                        profile.delta_pos_codeg < floor_t)
                        continue;
                    ++row.samples_tested;
                    Verdict v = has_structure(h, s);
                    if (v == Verdict::yes) ++row.samples_with_structure;
                    else
                        row.discrepancies.push_back(
                            "above-threshold sample " + std::to_string(row.samples_tested) +
                            " lacks the structure (" + to_string(v) + ")");
                }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace pcd
