#include "pcd/exact.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pcd {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    std::optional<double> budget_ms;
    bool expired_flag = false;

    explicit Deadline(const SolveOptions& opts) : budget_ms(opts.deadline_ms) {}

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    // cheap when called every node; the clock is read every 1024 nodes
    bool expired(std::uint64_t nodes) {
        if (expired_flag) return true;
        if (!budget_ms) return false;
        if ((nodes & 1023u) == 0u && elapsed_ms() > *budget_ms) expired_flag = true;
        return expired_flag;
    }
};

std::uint64_t edge_mask(const Edge& e) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= 1ull << v;
    return m;
}

void require_mask_scale(const Hypergraph& h, const char* who) {
    if (h.vertex_count() > 64)
        throw std::invalid_argument(std::string(who) + ": supports at most 64 vertices");
}

std::vector<std::vector<int>> edges_at_vertex(const Hypergraph& h) {
    std::vector<std::vector<int>> at(static_cast<std::size_t>(h.vertex_count()));
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (Vertex v : h.edge(i)) at[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    return at;
}

} // namespace

// ---------------------------------------------------------------- matching

namespace {

struct MatchingSearch {
    const Hypergraph& h;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> at;
    Deadline deadline;
    std::uint64_t nodes = 0;
    int n, r;
    std::uint64_t full;

    int best = -1;
    std::vector<int> best_edges;
    std::vector<int> stack;

    MatchingSearch(const Hypergraph& hh, const SolveOptions& opts)
        : h(hh), at(edges_at_vertex(hh)), deadline(opts), n(hh.vertex_count()),
          r(hh.uniformity()), full((n == 64) ? ~0ull : ((1ull << n) - 1)) {
        masks.reserve(h.edge_count());
        for (const Edge& e : h.edges()) masks.push_back(edge_mask(e));
    }

    void consider() {
        if (static_cast<int>(stack.size()) > best) {
            best = static_cast<int>(stack.size());
            best_edges = stack;
        }
    }

    void dfs(std::uint64_t used, std::uint64_t skipped) {
        ++nodes;
        if (deadline.expired(nodes)) return;
        consider();
        std::uint64_t open = full & ~(used | skipped);
        int free_count = std::popcount(open);
        if (static_cast<int>(stack.size()) + free_count / r <= best) return;
        if (open == 0) return;
        int v = std::countr_zero(open);
        for (int ei : at[static_cast<std::size_t>(v)]) {
            if (masks[static_cast<std::size_t>(ei)] & (used | skipped)) continue;
            stack.push_back(ei);
            dfs(used | masks[static_cast<std::size_t>(ei)], skipped);
            stack.pop_back();
            if (deadline.expired_flag) return;
        }
        dfs(used, skipped | (1ull << v));
    }
};

} // namespace

SolveResult<Matching> max_matching(const Hypergraph& h, const SolveOptions& opts) {
    require_mask_scale(h, "max_matching");
    MatchingSearch search(h, opts);

    // greedy lower bound seeds the pruning
    {
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            if (search.masks[i] & used) continue;
            used |= search.masks[i];
            search.stack.push_back(static_cast<int>(i));
        }
        search.consider();
        search.stack.clear();
    }
    search.dfs(0, 0);

    SolveResult<Matching> res;
    Matching m;
    for (int ei : search.best_edges) m.edges.push_back(h.edge(static_cast<std::size_t>(ei)));
    res.certificate = std::move(m);
    res.stats.nodes = search.nodes;
    res.stats.ms = search.deadline.elapsed_ms();
    res.stats.exhaustive = !search.deadline.expired_flag;
    res.verdict = res.stats.exhaustive ? Verdict::yes : Verdict::unknown;
    if (!res.stats.exhaustive) res.note = "deadline reached; matching is a lower bound";
    return res;
}

namespace {

struct PerfectMatchingSearch {
    const Hypergraph& h;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> at;
    Deadline deadline;
    std::uint64_t nodes = 0;
    std::uint64_t full;
    std::vector<int> stack;
    bool found = false;

    PerfectMatchingSearch(const Hypergraph& hh, const SolveOptions& opts)
        : h(hh), at(edges_at_vertex(hh)), deadline(opts),
          full((hh.vertex_count() == 64) ? ~0ull : ((1ull << hh.vertex_count()) - 1)) {
        masks.reserve(h.edge_count());
        for (const Edge& e : h.edges()) masks.push_back(edge_mask(e));
    }

    bool dfs(std::uint64_t used) {
        ++nodes;
        if (deadline.expired(nodes)) return false;
        if (used == full) return found = true;
        int v = std::countr_zero(~used & full);
        for (int ei : at[static_cast<std::size_t>(v)]) {
            if (masks[static_cast<std::size_t>(ei)] & used) continue;
            stack.push_back(ei);
            if (dfs(used | masks[static_cast<std::size_t>(ei)])) return true;
            stack.pop_back();
            if (deadline.expired_flag) return false;
        }
        return false;
    }
};

} // namespace

SolveResult<Matching> has_perfect_matching(const Hypergraph& h, const SolveOptions& opts) {
    require_mask_scale(h, "has_perfect_matching");
    SolveResult<Matching> res;
    if (h.vertex_count() == 0) {
        res.verdict = Verdict::yes;
        res.certificate = Matching{};
        return res;
    }
    if (h.vertex_count() % h.uniformity() != 0) {
        res.verdict = Verdict::no;
        res.note = "uniformity does not divide the vertex count";
        return res;
    }
    PerfectMatchingSearch search(h, opts);
    bool ok = search.dfs(0);
    res.stats.nodes = search.nodes;
    res.stats.ms = search.deadline.elapsed_ms();
    res.stats.exhaustive = !search.deadline.expired_flag;
    if (ok) {
        Matching m;
        for (int ei : search.stack) m.edges.push_back(h.edge(static_cast<std::size_t>(ei)));
        res.certificate = std::move(m);
        res.verdict = Verdict::yes;
    } else {
        res.verdict = res.stats.exhaustive ? Verdict::no : Verdict::unknown;
        if (!res.stats.exhaustive) res.note = "deadline reached before the search space was exhausted";
    }
    return res;
}

// ------------------------------------------------------------ Berge cycles

namespace {

// Incremental system-of-distinct-representatives check: path pairs are
// slots, each must own a distinct host edge drawn from its candidate list.
struct SdrMatcher {
    std::vector<const std::vector<int>*> candidates;  // per slot
    std::vector<int> slot_edge;                       // slot -> edge id or -1
    std::vector<int> owner;                           // edge id -> slot or -1
    std::vector<char> edge_seen;                      // scratch for one augment

    explicit SdrMatcher(std::size_t edge_count)
        : owner(edge_count, -1), edge_seen(edge_count, 0) {}

    bool augment(int slot) {
        for (int e : *candidates[static_cast<std::size_t>(slot)]) {
            if (edge_seen[static_cast<std::size_t>(e)]) continue;
            edge_seen[static_cast<std::size_t>(e)] = 1;
            if (owner[static_cast<std::size_t>(e)] == -1 ||
                augment(owner[static_cast<std::size_t>(e)])) {
                owner[static_cast<std::size_t>(e)] = slot;
                slot_edge[static_cast<std::size_t>(slot)] = e;
                return true;
            }
        }
        return false;
    }

    // returns the pre-call assignment so the caller can roll back
    std::vector<int> snapshot() const { return slot_edge; }

    void restore(const std::vector<int>& snap) {
        for (int e : slot_edge)
            if (e != -1) owner[static_cast<std::size_t>(e)] = -1;
        slot_edge = snap;
        for (std::size_t s = 0; s < slot_edge.size(); ++s)
            if (slot_edge[s] != -1) owner[static_cast<std::size_t>(slot_edge[s])] = static_cast<int>(s);
    }

    bool try_add(const std::vector<int>* cand) {
        candidates.push_back(cand);
        slot_edge.push_back(-1);
        std::fill(edge_seen.begin(), edge_seen.end(), 0);
        if (augment(static_cast<int>(candidates.size()) - 1)) return true;
        candidates.pop_back();
        slot_edge.pop_back();
        return false;
    }

    void drop_last() {
        int slot = static_cast<int>(candidates.size()) - 1;
        int e = slot_edge[static_cast<std::size_t>(slot)];
        if (e != -1) owner[static_cast<std::size_t>(e)] = -1;
        candidates.pop_back();
        slot_edge.pop_back();
    }
};

struct BergeSearch {
    const Hypergraph& h;
    int n;
    Deadline deadline;
    std::uint64_t nodes = 0;

    std::vector<std::uint64_t> pair_adj;                // per vertex, bitmask of co-degree partners
    std::map<std::pair<int, int>, std::vector<int>> pair_edges;
    std::vector<int> shadow_deg;
    SdrMatcher matcher;

    std::vector<Vertex> path;
    std::uint64_t used = 0;
    bool found = false;

    BergeSearch(const Hypergraph& hh, const SolveOptions& opts)
        : h(hh), n(hh.vertex_count()), deadline(opts),
          pair_adj(static_cast<std::size_t>(hh.vertex_count()), 0), matcher(hh.edge_count()) {
        for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
            const Edge& e = h.edge(ei);
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b) {
                    pair_adj[static_cast<std::size_t>(e[a])] |= 1ull << e[b];
                    pair_adj[static_cast<std::size_t>(e[b])] |= 1ull << e[a];
                    pair_edges[{e[a], e[b]}].push_back(static_cast<int>(ei));
                }
        }
        shadow_deg.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            shadow_deg[static_cast<std::size_t>(v)] = std::popcount(pair_adj[static_cast<std::size_t>(v)]);
    }

    const std::vector<int>* cands(int a, int b) {
        auto it = pair_edges.find({std::min(a, b), std::max(a, b)});
        return it == pair_edges.end() ? nullptr : &it->second;
    }

    bool adjacent(int a, int b) const { return (pair_adj[static_cast<std::size_t>(a)] >> b) & 1; }

    // every vertex still to be placed needs two cycle neighbours drawn from
    // the unplaced vertices and the two open path ends
    bool frontier_ok(int last) const {
        std::uint64_t open = ~used;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            std::uint64_t pool = (pair_adj[static_cast<std::size_t>(w)] & open & ~(1ull << w)) |
                                 (pair_adj[static_cast<std::size_t>(w)] & ((1ull << last) | (1ull << path[0])));
            if (std::popcount(pool) < 2) return false;
        }
        return true;
    }

    void dfs(int last) {
        if (found || deadline.expired(++nodes)) return;
        if (static_cast<int>(path.size()) == n) {
            const std::vector<int>* cl = cands(last, path[0]);
            if (cl && matcher.try_add(cl)) {
                found = true;
                return;  // assignment is left intact for certificate extraction
            }
            return;
        }
        if (!frontier_ok(last)) return;

        std::vector<int> order;
        for (int u = 0; u < n; ++u)
            if (!((used >> u) & 1) && adjacent(last, u)) order.push_back(u);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(shadow_deg[static_cast<std::size_t>(a)], a) <
                   std::pair(shadow_deg[static_cast<std::size_t>(b)], b);
        });
        for (int u : order) {
            const std::vector<int>* cl = cands(last, u);
            auto snap = matcher.snapshot();
            if (!matcher.try_add(cl)) continue;
            path.push_back(u);
            used |= 1ull << u;
            dfs(u);
            if (found) return;
            used &= ~(1ull << u);
            path.pop_back();
            matcher.drop_last();
            matcher.restore(snap);
        }
    }
};

} // namespace

SolveResult<BergeCycle> find_berge_hamiltonian_cycle(const Hypergraph& h, const SolveOptions& opts) {
    require_mask_scale(h, "find_berge_hamiltonian_cycle");
    SolveResult<BergeCycle> res;
    const int n = h.vertex_count();
    if (n < 2) {
        res.verdict = Verdict::no;
        res.note = "cycle needs at least 2 vertices";
        return res;
    }
    if (n > 24 && !opts.force) {
        res.verdict = Verdict::unknown;
        res.note = "refused: n > 24 exceeds the exhaustive-search guardrail (use force)";
        res.stats.exhaustive = false;
        return res;
    }

    BergeSearch search(h, opts);

    if (n == 2) {
        // degenerate Hamiltonian Berge cycle: two distinct edges on the pair
        const std::vector<int>* cl = search.cands(0, 1);
        if (cl && cl->size() >= 2) {
            BergeCycle c;
            c.vertices = {0, 1};
            c.cycle_edges = {h.edge(static_cast<std::size_t>((*cl)[0])),
                             h.edge(static_cast<std::size_t>((*cl)[1]))};
            res.certificate = std::move(c);
            res.verdict = Verdict::yes;
        } else {
            res.verdict = Verdict::no;
        }
        return res;
    }

    for (int v = 0; v < n; ++v) {
        if (search.shadow_deg[static_cast<std::size_t>(v)] < 2) {
            res.verdict = Verdict::no;
            res.note = "vertex " + std::to_string(v) + " lies in fewer than 2 co-degree pairs";
            return res;
        }
    }

    int start = 0;
    for (int v = 1; v < n; ++v)
        if (search.shadow_deg[static_cast<std::size_t>(v)] < search.shadow_deg[static_cast<std::size_t>(start)])
            start = v;
    search.path.push_back(start);
    search.used = 1ull << start;
    search.dfs(start);

    res.stats.nodes = search.nodes;
    res.stats.ms = search.deadline.elapsed_ms();
    res.stats.exhaustive = !search.deadline.expired_flag;
    if (search.found) {
        BergeCycle c;
        c.vertices = search.path;
        for (std::size_t i = 0; i < search.path.size(); ++i)
            c.cycle_edges.push_back(h.edge(static_cast<std::size_t>(search.matcher.slot_edge[i])));
        res.certificate = std::move(c);
        res.verdict = Verdict::yes;
    } else {
        res.verdict = res.stats.exhaustive ? Verdict::no : Verdict::unknown;
        if (!res.stats.exhaustive) res.note = "deadline reached before the search space was exhausted";
    }
    return res;
}

// ------------------------------------------------------------ loose cycles

namespace {

struct LooseSearch {
    const Hypergraph& h;
    int n, r, k;
    Deadline deadline;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> at;

    std::vector<Vertex> seq;
    std::uint64_t used = 0;
    Vertex left_junction = 0;
    bool found = false;

    LooseSearch(const Hypergraph& hh, const SolveOptions& opts)
        : h(hh), n(hh.vertex_count()), r(hh.uniformity()), k(hh.vertex_count() / (hh.uniformity() - 1)),
          deadline(opts), at(edges_at_vertex(hh)) {
        for (const Edge& e : h.edges()) masks.push_back(edge_mask(e));
    }

    void dfs(int blocks_done, Vertex right_junction) {
        if (found || deadline.expired(++nodes)) return;
        if (blocks_done == k - 1) {
            // closing block: right junction + every unused vertex + the left junction
            Edge close;
            close.push_back(right_junction);
            close.push_back(left_junction);
            for (int v = 0; v < n; ++v)
                if (!((used >> v) & 1)) close.push_back(v);
            if (static_cast<int>(close.size()) != r) return;
            std::sort(close.begin(), close.end());
            if (!h.has_edge_sorted(close)) return;
            for (Vertex v : close)
                if (v != right_junction && v != left_junction) seq.push_back(v);
            found = true;
            return;
        }
        for (int ei : at[static_cast<std::size_t>(right_junction)]) {
            std::uint64_t m = masks[static_cast<std::size_t>(ei)];
            if (m & used & ~(1ull << right_junction)) continue;
            const Edge& e = h.edge(static_cast<std::size_t>(ei));
            for (Vertex next : e) {
                if (next == right_junction) continue;
                Edge interior;
                for (Vertex v : e)
                    if (v != right_junction && v != next) interior.push_back(v);
                std::size_t mark = seq.size();
                for (Vertex v : interior) seq.push_back(v);
                seq.push_back(next);
                used |= m;
                dfs(blocks_done + 1, next);
                if (found) return;
                used &= ~(m & ~(1ull << right_junction));
                // right_junction stays used: re-set its bit explicitly
                used |= 1ull << right_junction;
                seq.resize(mark);
            }
        }
    }
};

} // namespace

SolveResult<LooseWalk> find_loose_hamiltonian_cycle(const Hypergraph& h, const SolveOptions& opts) {
    require_mask_scale(h, "find_loose_hamiltonian_cycle");
    SolveResult<LooseWalk> res;
    const int n = h.vertex_count();
    const int r = h.uniformity();
    if (r < 2) throw std::invalid_argument("find_loose_hamiltonian_cycle: r must be >= 2");
    if (n == 0 || n % (r - 1) != 0 || n / (r - 1) < 2 || (r == 2 && n < 3)) {
        res.verdict = Verdict::no;
        res.note = "no loose Hamiltonian cycle fits this vertex count";
        return res;
    }
    if (n > 24 && !opts.force) {
        res.verdict = Verdict::unknown;
        res.note = "refused: n > 24 exceeds the exhaustive-search guardrail (use force)";
        res.stats.exhaustive = false;
        return res;
    }
    auto deg = vertex_degrees(h);
    if (std::any_of(deg.begin(), deg.end(), [](long long d) { return d == 0; })) {
        res.verdict = Verdict::no;
        res.note = "isolated vertex";
        return res;
    }

    LooseSearch search(h, opts);
    // anchor: some cycle edge contains vertex 0; try each as the first block
    for (int ei : search.at[0]) {
        const Edge& e = h.edge(static_cast<std::size_t>(ei));
        // first block junction pair (a < b) kills the reflection symmetry
        for (std::size_t ai = 0; ai < e.size() && !search.found; ++ai)
            for (std::size_t bi = ai + 1; bi < e.size() && !search.found; ++bi) {
                Vertex a = e[ai], b = e[bi];
                search.seq.clear();
                search.seq.push_back(a);
                for (Vertex v : e)
                    if (v != a && v != b) search.seq.push_back(v);
                search.seq.push_back(b);
                search.used = edge_mask(e);
                search.left_junction = a;
                search.dfs(1, b);
            }
        if (search.found || search.deadline.expired_flag) break;
    }

    res.stats.nodes = search.nodes;
    res.stats.ms = search.deadline.elapsed_ms();
    res.stats.exhaustive = !search.deadline.expired_flag;
    if (search.found) {
        LooseWalk w;
        w.vertices = search.seq;
        w.kind = LooseWalk::Kind::cycle;
        w.r = r;
        res.certificate = std::move(w);
        res.verdict = Verdict::yes;
    } else {
        res.verdict = res.stats.exhaustive ? Verdict::no : Verdict::unknown;
        if (!res.stats.exhaustive) res.note = "deadline reached before the search space was exhausted";
    }
    return res;
}

// ------------------------------------------------------------- C43 tiling

std::vector<Vertex> tiling_covered(const Tiling& t) {
    std::vector<Vertex> vs;
    if (t.kind == Tiling::Kind::c43) {
        for (const C43Copy& c : t.c43s) vs.insert(vs.end(), c.vertices.begin(), c.vertices.end());
    } else {
        for (const LooseWalk& p : t.paths) vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

ValidationReport validate_tiling(const Hypergraph& h, const Tiling& t) {
    ValidationReport rep;
    std::vector<char> seen(static_cast<std::size_t>(h.vertex_count()), 0);
    auto claim = [&](Vertex v) {
        if (v < 0 || v >= h.vertex_count()) {
            rep.fail("vertex label out of range");
            return;
        }
        if (seen[static_cast<std::size_t>(v)]) rep.fail("vertex " + std::to_string(v) + " covered twice");
        seen[static_cast<std::size_t>(v)] = 1;
    };
    if (t.kind == Tiling::Kind::c43) {
        for (const C43Copy& c : t.c43s) {
            if (c.vertices.size() != 4) {
                rep.fail("C43 member without exactly 4 vertices");
                continue;
            }
            for (Vertex v : c.vertices) claim(v);
            auto inside = [&](const Edge& e) {
                return std::all_of(e.begin(), e.end(), [&](Vertex v) {
                    return std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end();
                });
            };
            if (!h.has_edge(c.witness1) || !h.has_edge(c.witness2))
                rep.fail("C43 witness is not a host edge");
            else if (c.witness1 == c.witness2)
                rep.fail("C43 witnesses coincide");
            else if (!inside(c.witness1) || !inside(c.witness2))
                rep.fail("C43 witness leaves the member's vertex set");
        }
    } else {
        for (const LooseWalk& p : t.paths) {
            auto sub = validate_loose_walk(h, p);
            if (!sub.valid)
                for (const auto& v : sub.violations) rep.fail("path member: " + v);
            for (Vertex v : p.vertices) claim(v);
        }
    }
    std::vector<Vertex> expect;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!seen[static_cast<std::size_t>(v)]) expect.push_back(v);
    if (expect != t.uncovered) rep.fail("uncovered set is not the complement of the members");
    return rep;
}

bool is_alpha_deficient(const Tiling& t, double alpha, int n) {
    return static_cast<double>(t.uncovered.size()) <= alpha * n;
}

namespace {

struct C43Candidate {
    std::uint64_t mask;
    std::vector<Vertex> vertices;
    Edge w1, w2;
};

std::vector<C43Candidate> c43_candidates(const Hypergraph& h) {
    std::vector<C43Candidate> out;
    const int n = h.vertex_count();
    std::vector<Vertex> q(4);
    for (q[0] = 0; q[0] < n; ++q[0])
        for (q[1] = q[0] + 1; q[1] < n; ++q[1])
            for (q[2] = q[1] + 1; q[2] < n; ++q[2])
                for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
                    std::vector<Edge> inside;
                    for (int skip = 0; skip < 4 && inside.size() < 2; ++skip) {
                        Edge e;
                        for (int i = 0; i < 4; ++i)
                            if (i != skip) e.push_back(q[static_cast<std::size_t>(i)]);
                        if (h.has_edge_sorted(e)) inside.push_back(e);
                    }
                    if (inside.size() >= 2) {
                        C43Candidate c;
                        c.vertices = q;
                        c.mask = edge_mask(q);
                        c.w1 = inside[0];
                        c.w2 = inside[1];
                        out.push_back(std::move(c));
                    }
                }
    return out;
}

struct C43Search {
    const std::vector<C43Candidate>& cands;
    std::vector<std::vector<int>> at;  // candidate indices per vertex
    int n;
    Deadline deadline;
    std::uint64_t nodes = 0;
    std::uint64_t full;

    int best = -1;
    std::vector<int> best_pick;
    std::vector<int> stack;

    C43Search(const std::vector<C43Candidate>& cc, int nn, const SolveOptions& opts)
        : cands(cc), at(static_cast<std::size_t>(nn)), n(nn), deadline(opts),
          full((nn == 64) ? ~0ull : ((1ull << nn) - 1)) {
        for (std::size_t i = 0; i < cc.size(); ++i)
            for (Vertex v : cc[i].vertices) at[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }

    void consider() {
        if (static_cast<int>(stack.size()) > best) {
            best = static_cast<int>(stack.size());
            best_pick = stack;
        }
    }

    void dfs(std::uint64_t used, std::uint64_t skipped) {
        ++nodes;
        if (deadline.expired(nodes)) return;
        consider();
        std::uint64_t open = full & ~(used | skipped);
        if (static_cast<int>(stack.size()) + std::popcount(open) / 4 <= best) return;
        if (open == 0) return;
        int v = std::countr_zero(open);
        for (int ci : at[static_cast<std::size_t>(v)]) {
            if (cands[static_cast<std::size_t>(ci)].mask & (used | skipped)) continue;
            stack.push_back(ci);
            dfs(used | cands[static_cast<std::size_t>(ci)].mask, skipped);
            stack.pop_back();
            if (deadline.expired_flag) return;
        }
        dfs(used, skipped | (1ull << v));
    }
};

} // namespace

SolveResult<Tiling> max_c43_tiling(const Hypergraph& h, const SolveOptions& opts) {
    if (h.uniformity() != 3)
        throw std::invalid_argument("max_c43_tiling: requires a 3-uniform hypergraph");
    require_mask_scale(h, "max_c43_tiling");
    SolveResult<Tiling> res;
    if (h.vertex_count() > 15 && !opts.force) {
        res.verdict = Verdict::unknown;
        res.note = "refused: n > 15 exceeds the exhaustive-tiling guardrail (use force)";
        res.stats.exhaustive = false;
        return res;
    }
    auto cands = c43_candidates(h);
    C43Search search(cands, h.vertex_count(), opts);
    search.dfs(0, 0);

    Tiling t;
    t.kind = Tiling::Kind::c43;
    std::vector<char> covered(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int ci : search.best_pick) {
        const auto& c = cands[static_cast<std::size_t>(ci)];
        t.c43s.push_back({c.vertices, c.w1, c.w2});
        for (Vertex v : c.vertices) covered[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)]) t.uncovered.push_back(v);
    res.stats.nodes = search.nodes;
    res.stats.ms = search.deadline.elapsed_ms();
    res.stats.exhaustive = !search.deadline.expired_flag;
    t.optimal = res.stats.exhaustive;
    res.verdict = res.stats.exhaustive ? Verdict::yes : Verdict::unknown;
    if (!res.stats.exhaustive) res.note = "deadline reached; tiling size is a lower bound";
    res.certificate = std::move(t);
    return res;
}

// ------------------------------------------------------------ path tiling

namespace {

// Enumerates every vertex set carried by some loose path in h (n <= 12,
// r = 3), remembering one witness vertex sequence per set.
void collect_path_masks(const Hypergraph& h, std::vector<char>& is_path_mask,
                        std::vector<std::vector<Vertex>>& witness) {
    const int n = h.vertex_count();
    const std::size_t total_states = static_cast<std::size_t>(1u << n) * static_cast<std::size_t>(n);
    std::vector<char> seen(total_states, 0);
    std::vector<std::pair<std::uint32_t, int>> queue;
    std::vector<std::vector<Vertex>> state_seq;

    auto at = edges_at_vertex(h);

    auto push = [&](std::uint32_t mask, int endpoint, std::vector<Vertex> seq) {
        std::size_t key = static_cast<std::size_t>(mask) * n + static_cast<std::size_t>(endpoint);
        if (seen[key]) return;
        seen[key] = 1;
        queue.emplace_back(mask, endpoint);
        state_seq.push_back(seq);
        if (!is_path_mask[mask]) {
            is_path_mask[mask] = 1;
            witness[mask] = std::move(seq);
        }
    };

    for (const Edge& e : h.edges()) {
        std::uint32_t m = static_cast<std::uint32_t>(edge_mask(e));
        for (Vertex end : e) {
            std::vector<Vertex> rest;
            for (Vertex v : e)
                if (v != end) rest.push_back(v);
            push(m, end, {rest[0], rest[1], end});
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [mask, endpoint] = queue[qi];
        std::vector<Vertex> base = state_seq[qi];
        for (int ei : at[static_cast<std::size_t>(endpoint)]) {
            std::uint32_t em = static_cast<std::uint32_t>(edge_mask(h.edge(static_cast<std::size_t>(ei))));
            if (em & mask & ~(1u << endpoint)) continue;
            const Edge& e = h.edge(static_cast<std::size_t>(ei));
            std::vector<Vertex> others;
            for (Vertex v : e)
                if (v != endpoint) others.push_back(v);
            for (int pick = 0; pick < 2; ++pick) {
                Vertex mid = others[static_cast<std::size_t>(pick)];
                Vertex next = others[static_cast<std::size_t>(1 - pick)];
                auto seq = base;
                seq.push_back(mid);
                seq.push_back(next);
                push(mask | em, next, std::move(seq));
            }
        }
    }
}

Tiling greedy_path_tiling(const Hypergraph& h, int max_paths);

} // namespace

SolveResult<Tiling> best_path_tiling(const Hypergraph& h, int max_paths,
                                     [[maybe_unused]] const SolveOptions& opts) {
    if (h.uniformity() != 3)
        throw std::invalid_argument("best_path_tiling: requires a 3-uniform hypergraph");
    if (max_paths < 1) throw std::invalid_argument("best_path_tiling: max_paths must be >= 1");
    require_mask_scale(h, "best_path_tiling");
    const int n = h.vertex_count();
    SolveResult<Tiling> res;

    if (n > 12) {
        Tiling t = greedy_path_tiling(h, max_paths);
        res.stats.exhaustive = false;
        res.verdict = Verdict::yes;
        res.note = "heuristic mode: uncovered count is an upper bound, not an optimum";
        res.certificate = std::move(t);
        return res;
    }

    const std::uint32_t size = 1u << n;
    std::vector<char> is_path_mask(size, 0);
    std::vector<std::vector<Vertex>> witness(size);
    collect_path_masks(h, is_path_mask, witness);

    // coverable[j][m]: m is a disjoint union of at most j path masks
    std::vector<std::vector<char>> coverable(static_cast<std::size_t>(max_paths) + 1,
                                             std::vector<char>(size, 0));
    coverable[0][0] = 1;
    for (int j = 1; j <= max_paths; ++j) {
        coverable[static_cast<std::size_t>(j)] = coverable[static_cast<std::size_t>(j - 1)];
        auto& cur = coverable[static_cast<std::size_t>(j)];
        const auto& prev = coverable[static_cast<std::size_t>(j - 1)];
        for (std::uint32_t m = 1; m < size; ++m) {
            if (cur[m]) continue;
            for (std::uint32_t s = m; s; s = (s - 1) & m) {
                if (is_path_mask[s] && prev[m ^ s]) {
                    cur[m] = 1;
                    break;
                }
            }
        }
    }

    std::uint32_t best_mask = 0;
    int best_pop = 0;
    const auto& top = coverable[static_cast<std::size_t>(max_paths)];
    for (std::uint32_t m = 0; m < size; ++m) {
        if (top[m] && std::popcount(m) > best_pop) {
            best_pop = std::popcount(m);
            best_mask = m;
        }
    }

    Tiling t;
    t.kind = Tiling::Kind::loose_path;
    std::uint32_t m = best_mask;
    for (int j = max_paths; j >= 1 && m; --j) {
        if (coverable[static_cast<std::size_t>(j - 1)][m]) continue;
        for (std::uint32_t s = m; s; s = (s - 1) & m) {
            if (is_path_mask[s] && coverable[static_cast<std::size_t>(j - 1)][m ^ s]) {
                LooseWalk p;
                p.vertices = witness[s];
                p.kind = LooseWalk::Kind::path;
                p.r = 3;
                t.paths.push_back(std::move(p));
                m ^= s;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!((best_mask >> v) & 1)) t.uncovered.push_back(v);
    t.optimal = true;
    res.verdict = Verdict::yes;
    res.certificate = std::move(t);
    return res;
}

namespace {

// Bounded DFS for one long loose path within `allowed`; lowest-index-first.
struct GreedyPath {
    const Hypergraph& h;
    const std::vector<std::vector<int>>& at;
    std::uint64_t allowed;
    std::uint64_t budget = 200000;
    std::vector<Vertex> best;

    void dfs(std::vector<Vertex>& seq, std::uint64_t used, Vertex endpoint) {
        if (budget == 0) return;
        --budget;
        if (seq.size() > best.size()) best = seq;
        for (int ei : at[static_cast<std::size_t>(endpoint)]) {
            std::uint64_t em = edge_mask(h.edge(static_cast<std::size_t>(ei)));
            if ((em & ~allowed) || (em & used & ~(1ull << endpoint))) continue;
            const Edge& e = h.edge(static_cast<std::size_t>(ei));
            std::vector<Vertex> others;
            for (Vertex v : e)
                if (v != endpoint) others.push_back(v);
            for (int pick = 0; pick < 2; ++pick) {
                seq.push_back(others[static_cast<std::size_t>(pick)]);
                seq.push_back(others[static_cast<std::size_t>(1 - pick)]);
                dfs(seq, used | em, others[static_cast<std::size_t>(1 - pick)]);
                seq.pop_back();
                seq.pop_back();
            }
        }
    }
};

Tiling greedy_path_tiling(const Hypergraph& h, int max_paths) {
    const int n = h.vertex_count();
    auto at = edges_at_vertex(h);
    std::uint64_t allowed = (n == 64) ? ~0ull : ((1ull << n) - 1);
    Tiling t;
    t.kind = Tiling::Kind::loose_path;
    t.optimal = false;
    for (int p = 0; p < max_paths; ++p) {
        GreedyPath g{h, at, allowed, 200000, {}};
        for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
            std::uint64_t em = edge_mask(h.edge(ei));
            if (em & ~allowed) continue;
            const Edge& e = h.edge(ei);
            for (Vertex end : e) {
                std::vector<Vertex> seq;
                for (Vertex v : e)
                    if (v != end) seq.push_back(v);
                seq.push_back(end);
                g.dfs(seq, em, end);
            }
            if (!g.best.empty()) break;  // first usable start edge anchors the greedy path
        }
        if (g.best.empty()) break;
        LooseWalk w;
        w.vertices = g.best;
        w.kind = LooseWalk::Kind::path;
        w.r = 3;
        for (Vertex v : w.vertices) allowed &= ~(1ull << v);
        t.paths.push_back(std::move(w));
    }
    for (int v = 0; v < n; ++v)
        if ((allowed >> v) & 1) t.uncovered.push_back(v);
    return t;
}

} // namespace

// -------------------------------------------------------------- bipartite

void BipartiteGraph::add_edge(int x, int y) {
    if (x < 0 || x >= x_size || y < 0 || y >= y_size)
        throw std::invalid_argument("BipartiteGraph::add_edge: index out of range");
    auto& row = adj[static_cast<std::size_t>(x)];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.end() || *it != y) row.insert(it, y);
}

XSaturatingResult x_saturating_matching(const BipartiteGraph& b) {
    std::vector<int> match_x(static_cast<std::size_t>(b.x_size), -1);
    std::vector<int> match_y(static_cast<std::size_t>(b.y_size), -1);
    std::vector<char> vis(static_cast<std::size_t>(b.y_size), 0);

    auto dfs = [&](auto&& self, int x) -> bool {
        for (int y : b.adj[static_cast<std::size_t>(x)]) {
            if (vis[static_cast<std::size_t>(y)]) continue;
            vis[static_cast<std::size_t>(y)] = 1;
            if (match_y[static_cast<std::size_t>(y)] == -1 ||
                self(self, match_y[static_cast<std::size_t>(y)])) {
                match_y[static_cast<std::size_t>(y)] = x;
                match_x[static_cast<std::size_t>(x)] = y;
                return true;
            }
        }
        return false;
    };

    for (int x = 0; x < b.x_size; ++x) {
        std::fill(vis.begin(), vis.end(), 0);
        if (!dfs(dfs, x)) {
            // alternating reachability from x: the visited y's are N(W)
            HallWitness w;
            w.witness_x.push_back(x);
            for (int y = 0; y < b.y_size; ++y)
                if (vis[static_cast<std::size_t>(y)]) {
                    w.neighborhood.push_back(y);
                    w.witness_x.push_back(match_y[static_cast<std::size_t>(y)]);
                }
            std::sort(w.witness_x.begin(), w.witness_x.end());
            XSaturatingResult res;
            res.witness = std::move(w);
            return res;
        }
    }
    XSaturatingResult res;
    res.match = std::move(match_x);
    return res;
}

} // namespace pcd
