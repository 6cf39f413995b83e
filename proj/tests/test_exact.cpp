#include <doctest.h>

#include "naive_oracles.hpp"
#include "pcd/constructions.hpp"
#include "pcd/exact.hpp"

#include <random>
#include <stdexcept>

using namespace pcd;

TEST_CASE("max_matching basics") {
    auto res = max_matching(complete(3, 6));
    CHECK(res.verdict == Verdict::yes);
    CHECK(res.certificate->size() == 2);
    CHECK(validate_matching(complete(3, 6), *res.certificate).valid);

    auto [huv, sheet] = make_huv(3, 9, 4);
    CHECK(max_matching(huv).certificate->size() == 2);

    CHECK(max_matching(Hypergraph(3, 5)).certificate->size() == 0);
}

TEST_CASE("max_matching agrees with plain enumeration") {
    std::mt19937_64 seed_gen(41);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 6 + static_cast<int>(seed_gen() % 4);
        auto h = sample_with_floor(3, n, 0, 0.3, seed_gen());
        if (h.edge_count() > 16) continue;
        auto res = max_matching(h);
        CHECK(res.certificate->size() == naive::max_matching_size(h));
        CHECK(validate_matching(h, *res.certificate).valid);
    }
}

TEST_CASE("perfect matching decisions") {
    CHECK(has_perfect_matching(complete(3, 3)).verdict == Verdict::yes);
    CHECK(has_perfect_matching(complete(3, 7)).verdict == Verdict::no);  // divisibility
    auto [huv, sheet] = make_huv(3, 9, 4);
    CHECK(has_perfect_matching(huv).verdict == Verdict::no);

    std::mt19937_64 seed_gen(43);
    for (int rep = 0; rep < 30; ++rep) {
        auto h = sample_with_floor(3, 6 + 3 * static_cast<int>(seed_gen() % 2), 0, 0.4, seed_gen());
        auto res = has_perfect_matching(h);
        CHECK((res.verdict == Verdict::yes) == naive::has_perfect_matching(h));
        if (res.verdict == Verdict::yes) {
            auto rep2 = validate_matching(h, *res.certificate);
            CHECK(rep2.valid);
            CHECK(rep2.hamiltonian);
        }
    }
}

TEST_CASE("Berge Hamiltonian cycles: spec instances") {
    Hypergraph tri(2, 3, {{0, 1}, {1, 2}, {0, 2}});
    auto yes = find_berge_hamiltonian_cycle(tri);
    CHECK(yes.verdict == Verdict::yes);
    CHECK(validate_berge_cycle(tri, *yes.certificate).hamiltonian);

    auto [huv, sheet] = make_huv(3, 8, 5);
    CHECK(find_berge_hamiltonian_cycle(huv).verdict == Verdict::no);

    // the loose cycle of length 3 has only 3 edges; a Hamiltonian Berge
    // cycle on its 6 vertices would need 6 distinct edges
    CHECK(find_berge_hamiltonian_cycle(loose_cycle_graph(3, 3)).verdict == Verdict::no);
}

TEST_CASE("Berge solver agrees with the naive enumerator") {
    std::mt19937_64 seed_gen(47);
    int checked = 0;
    for (std::uint64_t s = 0; checked < 40; ++s) {
        int n = 5 + static_cast<int>(seed_gen() % 3);
        auto h = sample_with_floor(3, n, 0, 0.25 + 0.1 * (s % 4), seed_gen());
        ++checked;
        auto res = find_berge_hamiltonian_cycle(h);
        CHECK((res.verdict == Verdict::yes) == naive::has_berge_hamiltonian_cycle(h));
        if (res.verdict == Verdict::yes) {
            auto rep = validate_berge_cycle(h, *res.certificate);
            CHECK(rep.valid);
            CHECK(rep.hamiltonian);
        }
    }
    // sparse instances at the top of the oracle's range
    std::uint64_t seed = 300;
    for (int rep = 0; rep < 6; ++rep) {
        int n = 8 + rep % 2;
        auto h = sample_with_floor(3, n, 0, 0.12, seed++);
        auto res = find_berge_hamiltonian_cycle(h);
        CHECK((res.verdict == Verdict::yes) == naive::has_berge_hamiltonian_cycle(h));
    }
}

TEST_CASE("loose Hamiltonian cycles: spec instances") {
    CHECK(find_loose_hamiltonian_cycle(complete(3, 6)).verdict == Verdict::yes);
    CHECK(find_loose_hamiltonian_cycle(complete(3, 7)).verdict == Verdict::no);
    auto [huv, sheet] = make_huv(3, 10, 6);
    CHECK(find_loose_hamiltonian_cycle(huv).verdict == Verdict::no);

    auto lc = loose_cycle_graph(3, 4);
    auto res = find_loose_hamiltonian_cycle(lc);
    CHECK(res.verdict == Verdict::yes);
    CHECK(validate_loose_walk(lc, *res.certificate).hamiltonian);
}

TEST_CASE("loose solver agrees with the naive enumerator") {
    std::mt19937_64 seed_gen(53);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 6 + 2 * static_cast<int>(seed_gen() % 2);
        auto h = sample_with_floor(3, n, 0, 0.35 + 0.15 * (rep % 3), seed_gen());
        auto res = find_loose_hamiltonian_cycle(h);
        CHECK((res.verdict == Verdict::yes) == naive::has_loose_hamiltonian_cycle(h));
        if (res.verdict == Verdict::yes) {
            auto rep2 = validate_loose_walk(h, *res.certificate);
            CHECK(rep2.valid);
            CHECK(rep2.hamiltonian);
        }
    }
}

TEST_CASE("guardrails and deadlines") {
    auto big = complete(3, 26);
    CHECK(find_berge_hamiltonian_cycle(big).verdict == Verdict::unknown);
    CHECK(find_loose_hamiltonian_cycle(big).verdict == Verdict::unknown);
    SolveOptions forced;
    forced.force = true;
    CHECK(find_loose_hamiltonian_cycle(big, forced).verdict == Verdict::yes);

    auto c16 = complete(3, 16);
    CHECK(max_c43_tiling(c16).verdict == Verdict::unknown);  // n > 15 refusal

    SolveOptions tight;
    tight.deadline_ms = 0.0;
    auto [huv, sheet] = make_huv(3, 12, 7);
    auto res = find_berge_hamiltonian_cycle(huv, tight);
    CHECK(res.verdict == Verdict::unknown);
    CHECK_FALSE(res.stats.exhaustive);
}

TEST_CASE("C43 tiling: spec instances") {
    auto c43 = loose_cycle_graph(3, 2);
    auto one = max_c43_tiling(c43);
    CHECK(one.certificate->size() == 1);
    CHECK(one.certificate->uncovered.empty());

    auto two = max_c43_tiling(complete(3, 8));
    CHECK(two.certificate->size() == 2);

    Hypergraph single(3, 3, {{0, 1, 2}});
    auto zero = max_c43_tiling(single);
    CHECK(zero.certificate->size() == 0);
    CHECK(zero.certificate->uncovered.size() == 3);

    CHECK_THROWS_AS(max_c43_tiling(complete(2, 4)), std::invalid_argument);
}

TEST_CASE("C43 tiling agrees with plain recursion") {
    std::mt19937_64 seed_gen(59);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 6 + static_cast<int>(seed_gen() % 3);
        auto h = sample_with_floor(3, n, 0, 0.45, seed_gen());
        auto res = max_c43_tiling(h);
        CHECK(res.certificate->size() == naive::max_c43_tiling_size(h));
        CHECK(validate_tiling(h, *res.certificate).valid);
    }
}

TEST_CASE("path tiling: spec instances") {
    // a loose path hosting itself
    Hypergraph p5(3, 5, {{0, 1, 2}, {2, 3, 4}});
    auto res = best_path_tiling(p5, 1);
    CHECK(res.certificate->uncovered.empty());

    auto res9 = best_path_tiling(complete(3, 9), 1);
    CHECK(res9.certificate->uncovered.empty());
    CHECK(res9.certificate->paths.size() == 1);
    CHECK(res9.certificate->paths[0].vertices.size() == 9);

    auto empty = best_path_tiling(Hypergraph(3, 6), 3);
    CHECK(empty.certificate->uncovered.size() == 6);
}

TEST_CASE("path tiling is optimal and monotone at small n") {
    std::mt19937_64 seed_gen(61);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 7 + static_cast<int>(seed_gen() % 4);
        auto h = sample_with_floor(3, n, 0, 0.3, seed_gen());
        std::size_t prev = static_cast<std::size_t>(n) + 1;
        for (int p = 1; p <= 3; ++p) {
            auto res = best_path_tiling(h, p);
            CHECK(validate_tiling(h, *res.certificate).valid);
            CHECK(res.certificate->uncovered.size() <= prev);
            prev = res.certificate->uncovered.size();
        }
    }
}

TEST_CASE("heuristic path tiling marks itself as a bound") {
    auto res = best_path_tiling(complete(3, 14), 3);
    CHECK(res.verdict == Verdict::yes);
    CHECK_FALSE(res.stats.exhaustive);
    CHECK_FALSE(res.certificate->optimal);
    CHECK(validate_tiling(complete(3, 14), *res.certificate).valid);
}

TEST_CASE("x-saturating matching basics") {
    BipartiteGraph g(2, 2);
    g.add_edge(0, 0);
    g.add_edge(1, 1);
    auto res = x_saturating_matching(g);
    REQUIRE(res.match.has_value());

    BipartiteGraph bad(2, 1);
    bad.add_edge(0, 0);
    bad.add_edge(1, 0);
    auto res2 = x_saturating_matching(bad);
    REQUIRE(res2.witness.has_value());
    CHECK(res2.witness->witness_x == std::vector<int>{0, 1});
    CHECK(res2.witness->neighborhood.size() < res2.witness->witness_x.size());
}

TEST_CASE("x-saturating matching vs brute force on random instances") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 300; ++rep) {
        int xs = 1 + static_cast<int>(rng() % 6);
        int ys = 1 + static_cast<int>(rng() % 8);
        BipartiteGraph g(xs, ys);
        for (int x = 0; x < xs; ++x)
            for (int y = 0; y < ys; ++y)
                if (rng() % 3 == 0) g.add_edge(x, y);
        auto res = x_saturating_matching(g);
        bool expect = naive::saturating_matching_exists(xs, ys, g.adj);
        CHECK(res.match.has_value() == expect);
        CHECK(res.witness.has_value() == !expect);
        if (res.match) {
            std::vector<char> used(static_cast<std::size_t>(ys), 0);
            for (int x = 0; x < xs; ++x) {
                int y = (*res.match)[static_cast<std::size_t>(x)];
                bool in_adj = std::binary_search(g.adj[static_cast<std::size_t>(x)].begin(),
                                                 g.adj[static_cast<std::size_t>(x)].end(), y);
                CHECK(in_adj);
                CHECK_FALSE(used[static_cast<std::size_t>(y)]);
                used[static_cast<std::size_t>(y)] = 1;
            }
        } else {
            // verify the Hall violation directly
            std::vector<char> in_n(static_cast<std::size_t>(ys), 0);
            std::size_t n_size = 0;
            for (int x : res.witness->witness_x)
                for (int y : g.adj[static_cast<std::size_t>(x)])
                    if (!in_n[static_cast<std::size_t>(y)]) {
                        in_n[static_cast<std::size_t>(y)] = 1;
                        ++n_size;
                    }
            CHECK(n_size < res.witness->witness_x.size());
        }
    }
}
