#include "pcd/constructions.hpp"

#include <random>
#include <stdexcept>

namespace pcd {

namespace {

// Visits all k-subsets of [n] in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& visit) {
    if (k > n || k < 0) return;
    std::vector<Vertex> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    for (;;) {
        visit(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::pair<Hypergraph, ConstructionSheet> make_huv(int r, int n, int v_size) {
    if (r < 2) throw std::invalid_argument("make_huv: r must be >= 2");
    if (v_size < 0 || v_size > n) throw std::invalid_argument("make_huv: v_size out of range");
    const int u_size = n - v_size;
    if (u_size < r - 1)
        throw std::invalid_argument("make_huv: U must have at least r-1 vertices");

    std::vector<Edge> edges;
    // all r-sets with >= r-1 vertices in U = { S + x : S in C(U, r-1), x outside S }
    for_each_subset(u_size, r - 1, [&](const std::vector<Vertex>& s) {
        for (Vertex x = 0; x < n; ++x) {
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            if (x < u_size && x < s.back()) continue;  // keep each U-heavy set once: x must not displace S
            Edge e = s;
            e.push_back(x);
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
    });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph h(r, n, std::move(edges));

    ConstructionSheet sheet;
    sheet.name = "huv";
    sheet.r = r;
    sheet.n = n;
    sheet.u_size = u_size;
    sheet.v_size = v_size;
    sheet.claimed_delta_pos = (v_size >= 1) ? static_cast<long long>(u_size) - (r - 2)
                                            : static_cast<long long>(n) - r + 1;
    if (static_cast<long long>(v_size) * r > n)
        sheet.claimed_absences.push_back({"perfect-matching", "|V| > n/r"});
    if (static_cast<long long>(v_size) * 2 > n)
        sheet.claimed_absences.push_back({"berge-hc", "|V| > n/2"});
    if (static_cast<long long>(v_size) * (r - 1) > n)
        sheet.claimed_absences.push_back({"loose-hc", "|V| > n/(r-1)"});

    if (degree_profile(h).delta_pos_codeg != sheet.claimed_delta_pos)
        throw std::logic_error("make_huv: claimed positive co-degree does not match");
    return {std::move(h), std::move(sheet)};
}

Hypergraph complete(int r, int n) {
    if (n < r) throw std::invalid_argument("complete: need n >= r");
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const std::vector<Vertex>& s) { edges.push_back(s); });
    return Hypergraph(r, n, std::move(edges));
}

std::pair<Hypergraph, ConstructionSheet> two_cliques(int n) {
    if (n % 2 != 0) throw std::invalid_argument("two_cliques: n must be even");
    const int half = n / 2;
    if (half < 3) throw std::invalid_argument("two_cliques: each side needs >= 3 vertices");
    std::vector<Edge> edges;
    for_each_subset(half, 3, [&](const std::vector<Vertex>& s) {
        edges.push_back(s);
        Edge shifted = s;
        for (Vertex& v : shifted) v += half;
        edges.push_back(std::move(shifted));
    });
    Hypergraph h(3, n, std::move(edges));

    ConstructionSheet sheet;
    sheet.name = "two-cliques";
    sheet.r = 3;
    sheet.n = n;
    sheet.claimed_delta_pos = half - 2;
    sheet.claimed_absences.push_back({"loose-hc", "disconnected"});
    sheet.claimed_absences.push_back({"berge-hc", "disconnected"});
    if (degree_profile(h).delta_pos_codeg != sheet.claimed_delta_pos)
        throw std::logic_error("two_cliques: claimed positive co-degree does not match");
    return {std::move(h), std::move(sheet)};
}

Hypergraph loose_cycle_graph(int r, int k) {
    if (r < 2) throw std::invalid_argument("loose_cycle_graph: r must be >= 2");
    if (k < 2) throw std::invalid_argument("loose_cycle_graph: k must be >= 2");
    if (r == 2 && k < 3) throw std::invalid_argument("loose_cycle_graph: 2-uniform cycles need k >= 3");
    const int n = k * (r - 1);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        Edge e(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            e[static_cast<std::size_t>(j)] = (i * (r - 1) + j) % n;
        edges.push_back(std::move(e));
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph sample_with_floor(int r, int n, long long t, double edge_probability,
                             std::uint64_t seed) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("sample_with_floor: probability out of range");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const std::vector<Vertex>& s) {
        if (coin(rng) < edge_probability) edges.push_back(s);
    });
    Hypergraph h(r, n, std::move(edges));
    return codegree_prune(h, t);
}

} // namespace pcd
