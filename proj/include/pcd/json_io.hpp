#pragma once

// JSON serialization for certificates, reports and solver envelopes.
// Header-only on purpose: only the CLI and tests pay for the dependency.

#include "pcd/certificates.hpp"
#include "pcd/constructions.hpp"
#include "pcd/exact.hpp"
#include "pcd/procedures.hpp"
#include "pcd/threshold.hpp"

#include <json.hpp>

namespace pcd {

using json = nlohmann::json;

inline void to_json(json& j, const DegreeProfile& p) {
    j = json{{"delta1", p.delta1},
             {"delta_codeg", p.delta_codeg},
             {"delta_pos_codeg", p.delta_pos_codeg},
             {"isolated", p.isolated},
             {"is_empty", p.is_empty}};
}

inline void to_json(json& j, const ValidationReport& r) {
    j = json{{"valid", r.valid}, {"violations", r.violations}};
    j["hamiltonian"] = r.hamiltonian;
    j["strengthened"] = r.strengthened;
}

inline void to_json(json& j, const Matching& m) {
    j = json{{"edges", m.edges}, {"covered", m.covered()}};
}

inline void to_json(json& j, const BergeCycle& c) {
    j = json{{"vertices", c.vertices}, {"edges", c.cycle_edges}};
}

inline void to_json(json& j, const LooseWalk& w) {
    j = json{{"kind", w.kind == LooseWalk::Kind::path ? "path" : "cycle"},
             {"r", w.r},
             {"vertices", w.vertices}};
}

inline void to_json(json& j, const C43Copy& c) {
    j = json{{"vertices", c.vertices}, {"witness_edges", json::array({c.witness1, c.witness2})}};
}

inline void to_json(json& j, const Tiling& t) {
    j = json{{"kind", t.kind == Tiling::Kind::c43 ? "c43" : "loose-path"},
             {"uncovered", t.uncovered},
             {"optimal", t.optimal}};
    if (t.kind == Tiling::Kind::c43) j["members"] = t.c43s;
    else j["members"] = t.paths;
}

// ms is wall-clock and would break the byte-identical-output contract,
// so only the deterministic stats are serialized
inline void to_json(json& j, const SolveStats& s) {
    j = json{{"nodes", s.nodes}, {"exhaustive", s.exhaustive}};
}

template <class Cert>
void to_json(json& j, const SolveResult<Cert>& r) {
    j = json{{"answer", to_string(r.verdict)}, {"stats", r.stats}};
    if (r.certificate) j["certificate"] = *r.certificate;
    else j["certificate"] = nullptr;
    if (!r.note.empty()) j["note"] = r.note;
}

inline void to_json(json& j, const AbsenceClaim& a) {
    j = json{{"structure", a.structure}, {"regime", a.regime}};
}

inline void to_json(json& j, const ConstructionSheet& s) {
    j = json{{"name", s.name},
             {"r", s.r},
             {"n", s.n},
             {"u_size", s.u_size},
             {"v_size", s.v_size},
             {"claimed_delta_pos", s.claimed_delta_pos},
             {"claimed_absences", s.claimed_absences}};
}

inline void to_json(json& j, const Reservoir& r) {
    j = json{{"vertices", r.vertices},
             {"gamma", r.gamma},
             {"capacity", r.capacity},
             {"candidates_tried", r.candidates_tried},
             {"systems_checked", r.systems_checked}};
}

inline void to_json(json& j, const Absorber& a) {
    j = json{{"path", a.path}, {"windows", a.windows}};
}

template <class Cert>
void to_json(json& j, const ProcedureResult<Cert>& r) {
    j = json{{"hypotheses_met", r.hypotheses_met},
             {"answer", r.ok() ? "yes" : "failure"},
             {"stage_log", r.stage_log.entries}};
    if (r.certificate) j["certificate"] = *r.certificate;
    else j["certificate"] = nullptr;
    if (r.failure) j["failure"] = json{{"stage", r.failure->stage}, {"detail", r.failure->detail}};
}

inline void to_json(json& j, const ThresholdReport& r) {
    j = json{{"r", r.r},
             {"n", r.n},
             {"structure", to_string(r.structure)},
             {"threshold_lower", r.threshold_lower},
             {"threshold_upper", r.threshold_upper},
             {"exact", r.exact},
             {"method", r.method},
             {"witness_delta_pos", r.witness_delta_pos},
             {"instances_examined", r.instances_examined},
             {"counterexamples", r.counterexamples}};
}

inline void to_json(json& j, const TightnessRow& row) {
    j = json{{"n", row.n},
             {"regime_empty", row.regime_empty},
             {"construction_delta_pos", row.construction_delta_pos},
             {"threshold_formula", row.threshold_formula},
             {"construction_verdict", row.construction_verdict},
             {"construction_ok", row.construction_ok},
             {"samples_tested", row.samples_tested},
             {"samples_with_structure", row.samples_with_structure},
             {"discrepancies", row.discrepancies}};
}

inline void to_json(json& j, const TightnessReport& r) {
    j = json{{"theorem", r.theorem},
             {"r", r.r},
             {"structure", to_string(r.structure)},
             {"rows", r.rows}};
}

} // namespace pcd
