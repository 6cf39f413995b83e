#include <doctest.h>

#include "naive_oracles.hpp"
#include "pcd/certificates.hpp"
#include "pcd/constructions.hpp"
#include "pcd/hypergraph.hpp"

#include <random>
#include <sstream>

using namespace pcd;

TEST_CASE("degree profile on the empty 3-graph") {
    Hypergraph h(3, 5);
    auto p = degree_profile(h);
    CHECK(p.is_empty);
    CHECK(p.delta_pos_codeg == 0);
    CHECK(p.delta_codeg == 0);
    CHECK(p.delta1 == 0);
    CHECK(p.isolated == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("degree profile on the complete 3-graph on 4 vertices") {
    auto h = complete(3, 4);
    auto p = degree_profile(h);
    CHECK(p.delta_pos_codeg == 2);
    CHECK(p.delta_codeg == 2);
    CHECK(p.delta1 == 3);
    CHECK(p.isolated.empty());
}

TEST_CASE("degree profile of H^3_{U,V} with |U|=5, |V|=4") {
    auto [h, sheet] = make_huv(3, 9, 4);
    auto p = degree_profile(h);
    CHECK(p.delta_pos_codeg == 4);
    CHECK(sheet.claimed_delta_pos == 4);
    CHECK(p.delta_codeg == 0);  // pairs inside V have no extension
    CHECK(p.isolated.empty());
}

TEST_CASE("serial and parallel co-degree kernels agree") {
    std::mt19937_64 seed_gen(7);
    for (int rep = 0; rep < 12; ++rep) {
        int r = 2 + static_cast<int>(seed_gen() % 3);
        int n = r + 2 + static_cast<int>(seed_gen() % 9);
        auto h = sample_with_floor(r, n, 0, 0.5, seed_gen());
        auto a = codegree_counts_serial(h);
        auto b = codegree_counts_parallel(h);
        CHECK(a == b);
        auto pa = degree_profile_serial(h);
        auto pb = degree_profile(h);
        CHECK(pa.delta1 == pb.delta1);
        CHECK(pa.delta_codeg == pb.delta_codeg);
        CHECK(pa.delta_pos_codeg == pb.delta_pos_codeg);
        CHECK(pa.isolated == pb.isolated);
    }
}

TEST_CASE("positive co-degree floor holds for every extendable set") {
    std::mt19937_64 seed_gen(11);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 5 + static_cast<int>(seed_gen() % 8);
        auto h = sample_with_floor(3, n, 0, 0.4, seed_gen());
        auto p = degree_profile(h);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                long long d = codegree(h, {a, b});
                if (d > 0) CHECK(d >= p.delta_pos_codeg);
            }
    }
}

TEST_CASE("co-degree neighborhoods") {
    auto k5 = complete(3, 5);
    CHECK(codegree_neighborhood(k5, {0, 1}) == std::vector<Vertex>{2, 3, 4});
    CHECK_THROWS_AS(codegree_neighborhood(k5, {0}), std::invalid_argument);

    auto [huv, sheet] = make_huv(3, 9, 4);
    // u in U, v in V: the neighborhood is U minus u
    CHECK(codegree_neighborhood(huv, {0, 5}) == std::vector<Vertex>{1, 2, 3, 4});
    // pairs inside V are unextendable
    CHECK(codegree_neighborhood(huv, {5, 6}).empty());
}

TEST_CASE("link graphs") {
    auto k4 = complete(3, 4);
    auto link = link_graph(k4, 0);
    CHECK(link.uniformity() == 2);
    CHECK(link.edge_count() == 3);  // triangle on {1,2,3}
    CHECK(link.has_edge({1, 2}));
    CHECK(link.has_edge({1, 3}));
    CHECK(link.has_edge({2, 3}));

    Hypergraph single(3, 4, {{0, 1, 2}});
    CHECK(link_graph(single, 3).empty());

    auto [huv, sheet] = make_huv(3, 9, 4);
    auto lv = link_graph(huv, 5);  // 5 lies in V, its link is the clique on U
    CHECK(lv.edge_count() == 10);
    for (Vertex a = 0; a < 5; ++a)
        for (Vertex b = a + 1; b < 5; ++b) CHECK(lv.has_edge({a, b}));
}

TEST_CASE("shadow graph equals the positive co-degree pairs") {
    Hypergraph single(3, 3, {{0, 1, 2}});
    auto sh = shadow_graph(single);
    CHECK(sh.edge_count() == 3);

    CHECK(shadow_graph(Hypergraph(3, 6)).empty());

    std::mt19937_64 seed_gen(3);
    for (int rep = 0; rep < 8; ++rep) {
        int n = 5 + static_cast<int>(seed_gen() % 6);
        auto h = sample_with_floor(3, n, 0, 0.35, seed_gen());
        auto sh2 = shadow_graph(h);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                CHECK(sh2.has_edge({a, b}) == !codegree_neighborhood(h, {a, b}).empty());
    }
}

TEST_CASE("independence notions") {
    auto [huv, sheet] = make_huv(3, 9, 4);
    CHECK(is_strongly_independent(huv, {5, 6, 7, 8}));
    CHECK(is_strongly_independent(huv, {3}));
    CHECK_FALSE(is_strongly_independent(complete(3, 5), {0, 1}));
    // V+u is independent but not strongly independent
    CHECK(is_independent(huv, {5, 6, 7, 8}));
    CHECK_FALSE(is_independent(complete(3, 5), {0, 1, 2}));
}

TEST_CASE("codegree_prune basics") {
    auto [huv, sheet] = make_huv(3, 9, 4);
    CHECK(codegree_prune(huv, 4) == huv);  // already at the floor

    Hypergraph single(3, 4, {{0, 1, 2}});
    CHECK(codegree_prune(single, 2).empty());
}

TEST_CASE("codegree_prune matches the brute-force maximal subgraph oracle") {
    std::mt19937_64 seed_gen(17);
    int done = 0;
    for (std::uint64_t s = 0; done < 30; ++s) {
        auto h = sample_with_floor(3, 7, 0, 0.22, seed_gen());
        if (h.edge_count() > 11) continue;
        ++done;
        for (long long t : {1, 2, 3}) {
            auto pruned = codegree_prune(h, t);
            auto oracle = naive::prune_oracle(h, t);
            CHECK(pruned == oracle);
            // idempotent
            CHECK(codegree_prune(pruned, t) == pruned);
        }
        // monotone in t
        auto p1 = codegree_prune(h, 1);
        auto p2 = codegree_prune(h, 2);
        for (const Edge& e : p2.edges()) CHECK(p1.has_edge_sorted(e));

        // maximality: re-adding any deleted edge cannot survive re-closure
        auto pruned2 = codegree_prune(h, 2);
        for (const Edge& e : h.edges()) {
            if (pruned2.has_edge_sorted(e)) continue;
            auto edges = pruned2.edges();
            edges.push_back(e);
            Hypergraph readded(3, h.vertex_count(), edges);
            CHECK(codegree_prune(readded, 2).edge_count() < readded.edge_count());
        }
    }
}

TEST_CASE("hg round trip and parse errors") {
    auto [h, sheet] = make_huv(3, 9, 4);
    std::stringstream ss;
    h.write_hg(ss);
    auto back = Hypergraph::parse_hg(ss);
    CHECK(back == h);

    std::stringstream bad1("3 4\n0 1 2\n0 1 2\n");
    CHECK_THROWS_AS(Hypergraph::parse_hg(bad1), std::invalid_argument);
    std::stringstream bad2("3 4\n2 1 0\n");
    CHECK_THROWS_AS(Hypergraph::parse_hg(bad2), std::invalid_argument);
    std::stringstream bad3("3 4\n0 1\n");
    CHECK_THROWS_AS(Hypergraph::parse_hg(bad3), std::invalid_argument);
    std::stringstream ok("3 4\n# comment\n0 1 2\n\n1 2 3\n");
    CHECK(Hypergraph::parse_hg(ok).edge_count() == 2);
}

TEST_CASE("validators accept the spec examples") {
    // triangle as a 2-graph Berge Hamiltonian cycle
    Hypergraph tri(2, 3, {{0, 1}, {1, 2}, {0, 2}});
    BergeCycle c;
    c.vertices = {0, 1, 2};
    c.cycle_edges = {{0, 1}, {1, 2}, {0, 2}};
    auto rep = validate_berge_cycle(tri, c);
    CHECK(rep.valid);
    CHECK(rep.hamiltonian);

    // the defining order of a loose cycle of length 3
    auto lc = loose_cycle_graph(3, 3);
    LooseWalk w;
    w.vertices = {0, 1, 2, 3, 4, 5};
    w.kind = LooseWalk::Kind::cycle;
    w.r = 3;
    auto rep2 = validate_loose_walk(lc, w);
    CHECK(rep2.valid);
    CHECK(rep2.hamiltonian);

    // a Berge cycle reusing an edge is rejected
    BergeCycle dup;
    dup.vertices = {0, 1, 2};
    dup.cycle_edges = {{0, 1}, {1, 2}, {1, 2}};
    Hypergraph tri2(2, 3, {{0, 1}, {1, 2}});
    auto rep3 = validate_berge_cycle(tri2, dup);
    CHECK_FALSE(rep3.valid);
    bool mentions_duplicate = false;
    for (const auto& v : rep3.violations)
        if (v.find("duplicate") != std::string::npos) mentions_duplicate = true;
    CHECK(mentions_duplicate);
}

TEST_CASE("loose walk validation agrees with a block-by-block checker") {
    std::mt19937_64 seed_gen(23);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 7;
        auto h = sample_with_floor(3, n, 0, 0.5, seed_gen());
        std::vector<Vertex> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), seed_gen);
        seq.resize(5);
        LooseWalk w;
        w.vertices = seq;
        w.kind = LooseWalk::Kind::path;
        w.r = 3;
        bool expect = naive::edge_in(h, {seq[0], seq[1], seq[2]}) &&
                      naive::edge_in(h, {seq[2], seq[3], seq[4]});
        CHECK(validate_loose_walk(h, w).valid == expect);
    }
}

TEST_CASE("matching validator") {
    auto k6 = complete(3, 6);
    Matching m;
    m.edges = {{0, 1, 2}, {3, 4, 5}};
    auto rep = validate_matching(k6, m);
    CHECK(rep.valid);
    CHECK(rep.hamiltonian);  // perfect

    Matching overlap;
    overlap.edges = {{0, 1, 2}, {2, 3, 4}};
    CHECK_FALSE(validate_matching(k6, overlap).valid);

    Matching nonedge;
    nonedge.edges = {{0, 1, 2}};
    Hypergraph sparse(3, 6, {{3, 4, 5}});
    CHECK_FALSE(validate_matching(sparse, nonedge).valid);
}
