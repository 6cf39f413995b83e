#include "pcd/certificates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pcd {

namespace {

std::string edge_str(const std::vector<Vertex>& e) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << '}';
    return os.str();
}

bool labels_ok(const Hypergraph& h, const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(),
                       [&](Vertex v) { return v >= 0 && v < h.vertex_count(); });
}

} // namespace

std::vector<Vertex> Matching::covered() const {
    std::vector<Vertex> vs;
    for (const Edge& e : edges) vs.insert(vs.end(), e.begin(), e.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool Matching::is_perfect(const Hypergraph& host) const {
    return static_cast<int>(covered().size()) == host.vertex_count() &&
           edges.size() * static_cast<std::size_t>(host.uniformity()) ==
               static_cast<std::size_t>(host.vertex_count());
}

std::size_t LooseWalk::num_blocks() const {
    const std::size_t step = static_cast<std::size_t>(r - 1);
    if (kind == Kind::path) {
        if (vertices.size() < static_cast<std::size_t>(r) || (vertices.size() - 1) % step != 0)
            return 0;
        return (vertices.size() - 1) / step;
    }
    if (vertices.size() % step != 0) return 0;
    return vertices.size() / step;
}

std::vector<Vertex> LooseWalk::block(std::size_t i) const {
    const std::size_t step = static_cast<std::size_t>(r - 1);
    std::vector<Vertex> b(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        std::size_t idx = i * step + static_cast<std::size_t>(j);
        if (kind == Kind::cycle) idx %= vertices.size();
        b[static_cast<std::size_t>(j)] = vertices[idx];
    }
    return b;
}

ValidationReport validate_matching(const Hypergraph& h, const Matching& m) {
    ValidationReport rep;
    std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const Edge& e : m.edges) {
        if (!labels_ok(h, e)) {
            rep.fail("vertex label out of range in " + edge_str(e));
            continue;
        }
        if (!h.has_edge(e)) rep.fail("non-edge used: " + edge_str(e));
        for (Vertex v : e) {
            if (used[static_cast<std::size_t>(v)])
                rep.fail("vertex " + std::to_string(v) + " covered twice");
            used[static_cast<std::size_t>(v)] = 1;
        }
    }
    rep.hamiltonian = rep.valid && m.is_perfect(h);
    return rep;
}

ValidationReport validate_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
    ValidationReport rep;
    const std::size_t k = c.vertices.size();
    if (c.cycle_edges.size() != k) {
        rep.fail("vertex and edge counts differ");
        return rep;
    }
    if (k < 2) {
        rep.fail("cycle needs at least 2 vertices");
        return rep;
    }
    if (!labels_ok(h, c.vertices)) {
        rep.fail("vertex label out of range");
        return rep;
    }
    {
        auto vs = c.vertices;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            rep.fail("repeated vertex");
    }
    {
        std::set<Edge> seen;
        for (Edge e : c.cycle_edges) {
            std::sort(e.begin(), e.end());
            if (!seen.insert(e).second) rep.fail("duplicate edge " + edge_str(e));
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        Edge e = c.cycle_edges[i];
        std::sort(e.begin(), e.end());
        if (!h.has_edge_sorted(e)) {
            rep.fail("non-edge used: " + edge_str(e));
            continue;
        }
        Vertex a = c.vertices[i];
        Vertex b = c.vertices[(i + 1) % k];
        if (!std::binary_search(e.begin(), e.end(), a) ||
            !std::binary_search(e.begin(), e.end(), b))
            rep.fail("edge " + std::to_string(i) + " does not contain its pair {" +
                     std::to_string(a) + "," + std::to_string(b) + "}");
    }
    rep.hamiltonian = rep.valid && k == static_cast<std::size_t>(h.vertex_count());

    // Strengthened property: indices taken cyclically, including j+1 = k.
    if (rep.valid) {
        rep.strengthened = true;
        for (std::size_t i = 0; i < k && rep.strengthened; ++i) {
            Edge e = c.cycle_edges[i];
            std::sort(e.begin(), e.end());
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                int hits = std::binary_search(e.begin(), e.end(), c.vertices[j]) +
                           std::binary_search(e.begin(), e.end(), c.vertices[(j + 1) % k]);
                if (hits > 1) {
                    rep.strengthened = false;
                    break;
                }
            }
        }
    }
    return rep;
}

ValidationReport validate_loose_walk(const Hypergraph& h, const LooseWalk& w) {
    ValidationReport rep;
    if (w.r != h.uniformity()) rep.fail("walk uniformity differs from host");
    if (!labels_ok(h, w.vertices)) {
        rep.fail("vertex label out of range");
        return rep;
    }
    {
        auto vs = w.vertices;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            rep.fail("repeated vertex");
    }
    const std::size_t step = static_cast<std::size_t>(w.r - 1);
    if (w.kind == LooseWalk::Kind::path) {
        if (w.vertices.size() < static_cast<std::size_t>(w.r) ||
            (w.vertices.size() - 1) % step != 0) {
            rep.fail("path vertex count is not k(r-1)+1 for some k >= 1");
            return rep;
        }
    } else {
        if (w.vertices.size() % step != 0 || w.vertices.size() / step < 2) {
            rep.fail("cycle vertex count is not k(r-1) for some k >= 2");
            return rep;
        }
    }
    const std::size_t blocks = w.num_blocks();
    std::set<Edge> block_sets;
    for (std::size_t i = 0; i < blocks; ++i) {
        auto b = w.block(i);
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
            rep.fail("block " + std::to_string(i) + " repeats a vertex");
            continue;
        }
        if (!block_sets.insert(b).second)
            rep.fail("block " + std::to_string(i) + " repeats an earlier defining edge");
        if (!h.has_edge_sorted(b)) rep.fail("block " + std::to_string(i) + " is not an edge: " + edge_str(b));
    }
    rep.hamiltonian = rep.valid && w.kind == LooseWalk::Kind::cycle &&
                      w.vertices.size() == static_cast<std::size_t>(h.vertex_count());
    return rep;
}

} // namespace pcd
