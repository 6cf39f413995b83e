#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcd {

using Vertex = int;
// An edge is a strictly ascending list of r vertex labels.
using Edge = std::vector<Vertex>;

// r-uniform hypergraph on vertex labels 0..n-1. Immutable after
// construction; edges are stored sorted lexicographically so every
// iteration order (and hence every solver trace) is reproducible.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int r, int n);
    // Takes edges in any order / any internal vertex order; canonicalizes.
    // Throws std::invalid_argument on out-of-range labels, wrong edge
    // size, repeated vertices inside an edge, or duplicate edges.
    Hypergraph(int r, int n, std::vector<Edge> edges);

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    // Membership; the input need not be sorted.
    bool has_edge(Edge e) const;
    bool has_edge_sorted(const Edge& e) const;

    bool operator==(const Hypergraph& other) const = default;

    // `.hg` text format: line 1 = "r n", then one edge per line as r
    // ascending 0-based labels; '#' starts a comment line. Duplicate
    // edge lines are a parse error.
    static Hypergraph parse_hg(std::istream& in);
    static Hypergraph load_hg(const std::string& path);
    void write_hg(std::ostream& out) const;
    void save_hg(const std::string& path) const;

private:
    int r_ = 2;
    int n_ = 0;
    std::vector<Edge> edges_;
};

struct DegreeProfile {
    long long delta1 = 0;           // min vertex degree
    long long delta_codeg = 0;      // min co-degree over all (r-1)-sets
    long long delta_pos_codeg = 0;  // min positive co-degree
    std::vector<Vertex> isolated;   // vertices of degree 0, ascending
    bool is_empty = true;           // no edges at all
};

// Co-degree table: packed (r-1)-set -> number of extending edges.
// Packing needs (r-1) * bit_width(n-1) <= 64; all supported scales fit.
using CodegreeCounts = std::unordered_map<std::uint64_t, int>;

int pack_bits(int n);
std::uint64_t pack_set(const std::vector<Vertex>& sorted_verts, int vbits);
std::vector<Vertex> unpack_set(std::uint64_t key, int k, int vbits);

// One pass over edges accumulating counts per (r-1)-subset. The OpenMP
// kernel shards edges across threads with thread-local tables and
// merges; the serial kernel is the reference the tests compare against.
CodegreeCounts codegree_counts_serial(const Hypergraph& h);
CodegreeCounts codegree_counts_parallel(const Hypergraph& h);

std::vector<long long> vertex_degrees(const Hypergraph& h);

DegreeProfile degree_profile(const Hypergraph& h);         // dispatches to the parallel kernel on large inputs
DegreeProfile degree_profile_serial(const Hypergraph& h);  // reference path

// N(S) = { u not in S : S + u is an edge }; |S| = r-1 required.
std::vector<Vertex> codegree_neighborhood(const Hypergraph& h, std::vector<Vertex> s);

// d_{r-1}(S) for |S| = r-1.
long long codegree(const Hypergraph& h, std::vector<Vertex> s);

// (r-1)-graph on the same label space: edges are the (r-1)-sets S with
// S + v in E(H). v has degree 0 in the result.
Hypergraph link_graph(const Hypergraph& h, Vertex v);

// (r-1)-graph of all (r-1)-sets of positive co-degree.
Hypergraph shadow_graph(const Hypergraph& h);

// No edge intersects S in more than one vertex.
bool is_strongly_independent(const Hypergraph& h, const std::vector<Vertex>& s);
// No edge is contained in S.
bool is_independent(const Hypergraph& h, const std::vector<Vertex>& s);

// The unique edge-maximal subhypergraph with min positive co-degree >= t
// (possibly empty). Each round deletes every edge containing an
// (r-1)-set S with 0 < d(S) < t, until a fixpoint.
Hypergraph codegree_prune(const Hypergraph& h, long long t);

// C(n, k) saturated at 2^62 to keep comparisons overflow-safe.
unsigned long long binomial(int n, int k);

} // namespace pcd
