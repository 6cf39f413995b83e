#include "pcd/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcd {

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n) {
    if (r < 1) throw std::invalid_argument("uniformity must be >= 1");
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
}

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges) : Hypergraph(r, n) {
    for (Edge& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge has wrong size");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge repeats a vertex");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("vertex label out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
}

bool Hypergraph::has_edge(Edge e) const {
    std::sort(e.begin(), e.end());
    return has_edge_sorted(e);
}

bool Hypergraph::has_edge_sorted(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph Hypergraph::parse_hg(std::istream& in) {
    std::string line;
    int r = -1, n = -1;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> r >> n) || r < 2 || n < 0)
                throw std::invalid_argument("bad .hg header at line " + std::to_string(lineno));
            have_header = true;
            continue;
        }
        Edge e;
        int v;
        while (ls >> v) e.push_back(v);
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge with wrong vertex count at line " + std::to_string(lineno));
        if (!std::is_sorted(e.begin(), e.end()) ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge vertices not strictly ascending at line " + std::to_string(lineno));
        edges.push_back(std::move(e));
    }
    if (!have_header) throw std::invalid_argument("missing .hg header");
    // the constructor rejects duplicates and out-of-range labels
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph Hypergraph::load_hg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_hg(in);
}

void Hypergraph::write_hg(std::ostream& out) const {
    out << r_ << ' ' << n_ << '\n';
    for (const Edge& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

void Hypergraph::save_hg(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_hg(out);
}

int pack_bits(int n) {
    unsigned span = static_cast<unsigned>(std::max(1, n - 1));
    return std::bit_width(span);
}

std::uint64_t pack_set(const std::vector<Vertex>& sorted_verts, int vbits) {
    std::uint64_t key = 0;
    int shift = 0;
    for (Vertex v : sorted_verts) {
        key |= static_cast<std::uint64_t>(v) << shift;
        shift += vbits;
    }
    return key;
}

std::vector<Vertex> unpack_set(std::uint64_t key, int k, int vbits) {
    std::vector<Vertex> verts(k);
    std::uint64_t mask = (vbits == 64) ? ~0ull : ((1ull << vbits) - 1);
    for (int i = 0; i < k; ++i) {
        verts[i] = static_cast<Vertex>(key & mask);
        key >>= vbits;
    }
    return verts;
}

namespace {

void check_packable(const Hypergraph& h) {
    int vbits = pack_bits(h.vertex_count());
    if (static_cast<long long>(vbits) * std::max(1, h.uniformity() - 1) > 64)
        throw std::invalid_argument("hypergraph too large for packed co-degree keys");
}

void accumulate_edge(CodegreeCounts& counts, const Edge& e, int vbits) {
    const int r = static_cast<int>(e.size());
    std::vector<Vertex> sub(r - 1);
    for (int skip = 0; skip < r; ++skip) {
        int j = 0;
        for (int i = 0; i < r; ++i)
            if (i != skip) sub[j++] = e[i];
        ++counts[pack_set(sub, vbits)];
    }
}

} // namespace

CodegreeCounts codegree_counts_serial(const Hypergraph& h) {
    check_packable(h);
    const int vbits = pack_bits(h.vertex_count());
    CodegreeCounts counts;
    counts.reserve(h.edge_count() * h.uniformity());
    for (const Edge& e : h.edges())
        accumulate_edge(counts, e, vbits);
    return counts;
}

CodegreeCounts codegree_counts_parallel(const Hypergraph& h) {
    check_packable(h);
    const int vbits = pack_bits(h.vertex_count());
    const auto& edges = h.edges();
    const std::int64_t m = static_cast<std::int64_t>(edges.size());

#ifdef _OPENMP
    int nthreads = omp_get_max_threads();
#else
    int nthreads = 1;
#endif
    std::vector<CodegreeCounts> local(static_cast<std::size_t>(nthreads));

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
    {
        CodegreeCounts& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
        mine.reserve(static_cast<std::size_t>(m) * h.uniformity() / nthreads + 16);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < m; ++i)
            accumulate_edge(mine, edges[static_cast<std::size_t>(i)], vbits);
    }
#else
    for (std::int64_t i = 0; i < m; ++i)
        accumulate_edge(local[0], edges[static_cast<std::size_t>(i)], vbits);
#endif

    CodegreeCounts counts = std::move(local[0]);
    for (std::size_t t = 1; t < local.size(); ++t)
        for (const auto& [key, c] : local[t]) counts[key] += c;
    return counts;
}

std::vector<long long> vertex_degrees(const Hypergraph& h) {
    std::vector<long long> deg(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const Edge& e : h.edges())
        for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

namespace {

DegreeProfile finalize_profile(const Hypergraph& h, const std::vector<long long>& deg,
                               long long min_pos, unsigned long long distinct_sets) {
    DegreeProfile p;
    p.is_empty = h.empty();
    p.delta1 = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] == 0) p.isolated.push_back(v);
    if (h.vertex_count() > 0) p.delta1 = *std::min_element(deg.begin(), deg.end());

    p.delta_pos_codeg = min_pos;  // 0 iff empty, per definition

    // delta_codeg = min over ALL (r-1)-sets: zero unless every (r-1)-set
    // has an extension.
    unsigned long long total = binomial(h.vertex_count(), h.uniformity() - 1);
    p.delta_codeg = (distinct_sets == total && !h.empty()) ? min_pos : 0;
    if (h.uniformity() == 1) {
        // 0-sets are degenerate; the single empty set has co-degree = |E|
        p.delta_codeg = static_cast<long long>(h.edge_count());
        p.delta_pos_codeg = p.delta_codeg;
    }
    return p;
}

} // namespace

DegreeProfile degree_profile_serial(const Hypergraph& h) {
    auto counts = codegree_counts_serial(h);
    long long min_pos = 0;
    for (const auto& [key, c] : counts) {
        (void)key;
        if (min_pos == 0 || c < min_pos) min_pos = c;
    }
    return finalize_profile(h, vertex_degrees(h), min_pos,
                            static_cast<unsigned long long>(counts.size()));
}

namespace {

// Dense profile kernel: packed (r-1)-subset keys index straight into one
// shared counting array, incremented atomically across edge shards. A
// parallel reduction over the slots then reads off the minimum positive
// count and the number of extendable sets.
DegreeProfile profile_dense(const Hypergraph& h, int key_bits) {
    const int r = h.uniformity();
    const int vbits = pack_bits(h.vertex_count());
    const auto& edges = h.edges();
    const std::int64_t m = static_cast<std::int64_t>(edges.size());
    std::vector<int> counts(1ull << key_bits, 0);
    std::vector<long long> deg(static_cast<std::size_t>(h.vertex_count()), 0);

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<long long> mydeg(deg.size(), 0);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t i = 0; i < m; ++i) {
            const Edge& e = edges[static_cast<std::size_t>(i)];
            for (int skip = 0; skip < r; ++skip) {
                std::uint64_t key = 0;
                int shift = 0;
                for (int j = 0; j < r; ++j) {
                    if (j == skip) continue;
                    key |= static_cast<std::uint64_t>(e[static_cast<std::size_t>(j)]) << shift;
                    shift += vbits;
                }
#ifdef _OPENMP
#pragma omp atomic update
#endif
                ++counts[key];
            }
            for (Vertex v : e) ++mydeg[static_cast<std::size_t>(v)];
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        for (std::size_t v = 0; v < deg.size(); ++v) deg[v] += mydeg[v];
    }

    long long min_pos = std::numeric_limits<long long>::max();
    unsigned long long distinct = 0;
    const std::int64_t slots = static_cast<std::int64_t>(counts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : min_pos) reduction(+ : distinct)
#endif
    for (std::int64_t i = 0; i < slots; ++i) {
        int c = counts[static_cast<std::size_t>(i)];
        if (c > 0) {
            ++distinct;
            if (c < min_pos) min_pos = c;
        }
    }
    if (distinct == 0) min_pos = 0;
    return finalize_profile(h, deg, min_pos, distinct);
}

} // namespace

DegreeProfile degree_profile(const Hypergraph& h) {
    // the dense kernel only pays off on big edge sets
    if (h.edge_count() >= 20000) {
        int key_bits = pack_bits(h.vertex_count()) * std::max(1, h.uniformity() - 1);
        if (key_bits <= 26) return profile_dense(h, key_bits);
    }
    return degree_profile_serial(h);
}

std::vector<Vertex> codegree_neighborhood(const Hypergraph& h, std::vector<Vertex> s) {
    if (static_cast<int>(s.size()) != h.uniformity() - 1)
        throw std::invalid_argument("codegree_neighborhood: set must have r-1 vertices");
    std::sort(s.begin(), s.end());
    for (Vertex v : s)
        if (v < 0 || v >= h.vertex_count())
            throw std::invalid_argument("codegree_neighborhood: vertex out of range");
    std::vector<Vertex> result;
    for (const Edge& e : h.edges()) {
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) {
            for (Vertex v : e)
                if (!std::binary_search(s.begin(), s.end(), v)) result.push_back(v);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

long long codegree(const Hypergraph& h, std::vector<Vertex> s) {
    return static_cast<long long>(codegree_neighborhood(h, std::move(s)).size());
}

Hypergraph link_graph(const Hypergraph& h, Vertex v) {
    if (v < 0 || v >= h.vertex_count())
        throw std::invalid_argument("link_graph: vertex out of range");
    std::vector<Edge> link_edges;
    for (const Edge& e : h.edges()) {
        if (std::binary_search(e.begin(), e.end(), v)) {
            Edge s;
            s.reserve(e.size() - 1);
            for (Vertex u : e)
                if (u != v) s.push_back(u);
            link_edges.push_back(std::move(s));
        }
    }
    return Hypergraph(h.uniformity() - 1, h.vertex_count(), std::move(link_edges));
}

Hypergraph shadow_graph(const Hypergraph& h) {
    if (h.uniformity() < 2)
        throw std::invalid_argument("shadow_graph: uniformity must be >= 2");
    const int vbits = pack_bits(h.vertex_count());
    auto counts = codegree_counts_serial(h);
    std::vector<Edge> shadow_edges;
    shadow_edges.reserve(counts.size());
    for (const auto& [key, c] : counts) {
        (void)c;
        shadow_edges.push_back(unpack_set(key, h.uniformity() - 1, vbits));
    }
    return Hypergraph(h.uniformity() - 1, h.vertex_count(), std::move(shadow_edges));
}

bool is_strongly_independent(const Hypergraph& h, const std::vector<Vertex>& s) {
    std::vector<char> in_s(static_cast<std::size_t>(h.vertex_count()), 0);
    for (Vertex v : s) in_s[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : h.edges()) {
        int hits = 0;
        for (Vertex v : e) hits += in_s[static_cast<std::size_t>(v)];
        if (hits > 1) return false;
    }
    return true;
}

bool is_independent(const Hypergraph& h, const std::vector<Vertex>& s) {
    std::vector<char> in_s(static_cast<std::size_t>(h.vertex_count()), 0);
    for (Vertex v : s) in_s[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : h.edges()) {
        bool inside = true;
        for (Vertex v : e) inside = inside && in_s[static_cast<std::size_t>(v)];
        if (inside) return false;
    }
    return true;
}

Hypergraph codegree_prune(const Hypergraph& h, long long t) {
    if (t < 0) throw std::invalid_argument("codegree_prune: t must be >= 0");
    if (t <= 1) return h;  // every nonzero co-degree is >= 1 already
    const int vbits = pack_bits(h.vertex_count());
    std::vector<Edge> current = h.edges();
    const int r = h.uniformity();
    for (;;) {
        Hypergraph stage(r, h.vertex_count(), current);
        auto counts = codegree_counts_serial(stage);
        std::vector<Edge> kept;
        kept.reserve(current.size());
        std::vector<Vertex> sub(static_cast<std::size_t>(r - 1));
        for (const Edge& e : stage.edges()) {
            bool ok = true;
            for (int skip = 0; skip < r && ok; ++skip) {
                int j = 0;
                for (int i = 0; i < r; ++i)
                    if (i != skip) sub[static_cast<std::size_t>(j++)] = e[static_cast<std::size_t>(i)];
                if (counts.at(pack_set(sub, vbits)) < t) ok = false;
            }
            if (ok) kept.push_back(e);
        }
        if (kept.size() == stage.edge_count()) return stage;
        current = std::move(kept);
    }
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    const unsigned long long cap = 1ull << 62;
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n-k+i) / i stays integral at each step
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (result > cap / num) return cap;
        result = result * num / static_cast<unsigned long long>(i);
        if (result >= cap) return cap;
    }
    return result;
}

} // namespace pcd
