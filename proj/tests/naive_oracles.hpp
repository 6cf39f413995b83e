#pragma once

// Independent reference implementations used only by tests. These share
// no pruning logic with the solvers under src/: plain enumeration, plain
// permutation scans, plain subset scans.

#include "pcd/certificates.hpp"
#include "pcd/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace naive {

using pcd::Edge;
using pcd::Hypergraph;
using pcd::Vertex;

inline bool edge_in(const Hypergraph& h, std::vector<Vertex> e) {
    std::sort(e.begin(), e.end());
    for (const Edge& f : h.edges())
        if (f == e) return true;
    return false;
}

// maximum matching size by plain include/exclude over the edge list
inline std::size_t max_matching_size(const Hypergraph& h) {
    std::vector<Edge> edges = h.edges();
    std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t idx, std::size_t count) -> void {
        best = std::max(best, count);
        if (idx == edges.size()) return;
        self(self, idx + 1, count);
        for (Vertex v : edges[idx])
            if (used[static_cast<std::size_t>(v)]) return;
        for (Vertex v : edges[idx]) used[static_cast<std::size_t>(v)] = 1;
        self(self, idx + 1, count + 1);
        for (Vertex v : edges[idx]) used[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, 0);
    return best;
}

inline bool has_perfect_matching(const Hypergraph& h) {
    if (h.vertex_count() == 0) return true;
    if (h.vertex_count() % h.uniformity() != 0) return false;
    return max_matching_size(h) * static_cast<std::size_t>(h.uniformity()) ==
           static_cast<std::size_t>(h.vertex_count());
}

// all distinct host edges assignable to the n consecutive pairs of a fixed
// cyclic order, by direct backtracking over edge choices
inline bool berge_assignable(const Hypergraph& h, const std::vector<Vertex>& order) {
    const std::size_t n = order.size();
    std::vector<char> taken(h.edge_count(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        Vertex a = order[i], b = order[(i + 1) % n];
        for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
            if (taken[ei]) continue;
            const Edge& e = h.edge(ei);
            if (!std::binary_search(e.begin(), e.end(), a) ||
                !std::binary_search(e.begin(), e.end(), b))
                continue;
            taken[ei] = 1;
            if (self(self, i + 1)) return true;
            taken[ei] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool has_berge_hamiltonian_cycle(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n < 2) return false;
    if (n == 2) {
        int count = 0;
        for (const Edge& e : h.edges())
            if (std::binary_search(e.begin(), e.end(), 0) &&
                std::binary_search(e.begin(), e.end(), 1))
                ++count;
        return count >= 2;
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        if (order[0] != 0) break;  // cyclic orders with 0 first cover every rotation class
        if (berge_assignable(h, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

inline bool is_loose_hc_order(const Hypergraph& h, const std::vector<Vertex>& order) {
    const int r = h.uniformity();
    const std::size_t n = order.size();
    const std::size_t k = n / static_cast<std::size_t>(r - 1);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Vertex> block;
        for (int j = 0; j < r; ++j)
            block.push_back(order[(i * static_cast<std::size_t>(r - 1) + static_cast<std::size_t>(j)) % n]);
        if (!edge_in(h, block)) return false;
    }
    return true;
}

inline bool has_loose_hamiltonian_cycle(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int r = h.uniformity();
    if (n == 0 || n % (r - 1) != 0 || n / (r - 1) < 2 || (r == 2 && n < 3)) return false;
    // no symmetry break: aligned listings of a loose cycle start only at
    // junction vertices, so anchoring the scan would be unsound
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_loose_hc_order(h, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// count of ordered 7-tuples of distinct vertices (avoiding x and y) whose
// path edges and absorption edges all exist
inline long long count_absorbers(const Hypergraph& h, Vertex x, Vertex y) {
    const int n = h.vertex_count();
    long long count = 0;
    std::array<Vertex, 7> t{};
    auto distinct_ok = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            if (t[static_cast<std::size_t>(i)] == x || t[static_cast<std::size_t>(i)] == y) return false;
            for (int j = i + 1; j < upto; ++j)
                if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)]) return false;
        }
        return true;
    };
    for (t[0] = 0; t[0] < n; ++t[0])
        for (t[1] = 0; t[1] < n; ++t[1])
            for (t[2] = 0; t[2] < n; ++t[2])
                for (t[3] = 0; t[3] < n; ++t[3])
                    for (t[4] = 0; t[4] < n; ++t[4])
                        for (t[5] = 0; t[5] < n; ++t[5])
                            for (t[6] = 0; t[6] < n; ++t[6]) {
                                if (!distinct_ok(7)) continue;
                                if (!edge_in(h, {t[0], t[1], t[2]})) continue;
                                if (!edge_in(h, {t[2], t[3], t[4]})) continue;
                                if (!edge_in(h, {t[4], t[5], t[6]})) continue;
                                if (!edge_in(h, {t[1], x, t[3]})) continue;
                                if (!edge_in(h, {t[3], y, t[5]})) continue;
                                ++count;
                            }
    return count;
}

// largest family of disjoint 4-sets spanning >= 2 edges, by plain recursion
inline std::size_t max_c43_tiling_size(const Hypergraph& h) {
    const int n = h.vertex_count();
    std::vector<std::vector<Vertex>> tiles;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    int inside = 0;
                    inside += edge_in(h, {a, b, c});
                    inside += edge_in(h, {a, b, d});
                    inside += edge_in(h, {a, c, d});
                    inside += edge_in(h, {b, c, d});
                    if (inside >= 2) tiles.push_back({a, b, c, d});
                }
    std::size_t best = 0;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t idx, std::size_t count) -> void {
        best = std::max(best, count);
        if (idx == tiles.size()) return;
        self(self, idx + 1, count);
        for (Vertex v : tiles[idx])
            if (used[static_cast<std::size_t>(v)]) return;
        for (Vertex v : tiles[idx]) used[static_cast<std::size_t>(v)] = 1;
        self(self, idx + 1, count + 1);
        for (Vertex v : tiles[idx]) used[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, 0);
    return best;
}

// exhaustive connecting-triple search written independently of connect_pairs
inline bool connectable(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                        const std::vector<Vertex>& allowed) {
    std::vector<char> used(allowed.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == pairs.size()) return true;
        for (std::size_t xi = 0; xi < allowed.size(); ++xi)
            for (std::size_t yi = 0; yi < allowed.size(); ++yi)
                for (std::size_t zi = 0; zi < allowed.size(); ++zi) {
                    if (xi == yi || yi == zi || xi == zi) continue;
                    if (used[xi] || used[yi] || used[zi]) continue;
                    if (!edge_in(h, {pairs[i].first, allowed[xi], allowed[yi]})) continue;
                    if (!edge_in(h, {allowed[yi], allowed[zi], pairs[i].second})) continue;
                    used[xi] = used[yi] = used[zi] = 1;
                    if (self(self, i + 1)) return true;
                    used[xi] = used[yi] = used[zi] = 0;
                }
        return false;
    };
    return rec(rec, 0);
}

// brute-force Hall check over all X-subsets
inline bool saturating_matching_exists(int x_size, int y_size,
                                       const std::vector<std::vector<int>>& adj) {
    (void)y_size;
    std::vector<int> match_y;  // chosen y per x so far
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == x_size) return true;
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (std::find(match_y.begin(), match_y.end(), y) != match_y.end()) continue;
            match_y.push_back(y);
            if (self(self, x + 1)) return true;
            match_y.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// the unique maximal subgraph with positive co-degree floor t, as the
// union of all edge subsets that satisfy the floor
inline Hypergraph prune_oracle(const Hypergraph& h, long long t) {
    const std::size_t m = h.edge_count();
    std::set<Edge> keep;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) sub.push_back(h.edge(i));
        Hypergraph cand(h.uniformity(), h.vertex_count(), sub);
        if (!cand.empty() && pcd::degree_profile(cand).delta_pos_codeg >= t)
            for (const Edge& e : cand.edges()) keep.insert(e);
    }
    std::vector<Edge> edges(keep.begin(), keep.end());
    return Hypergraph(h.uniformity(), h.vertex_count(), std::move(edges));
}

} // namespace naive
