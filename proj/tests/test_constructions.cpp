#include <doctest.h>

#include "pcd/constructions.hpp"
#include "pcd/exact.hpp"
#include "pcd/hypergraph.hpp"

#include <stdexcept>

using namespace pcd;

TEST_CASE("make_huv matches construction 1") {
    auto [h, sheet] = make_huv(3, 9, 4);
    CHECK(sheet.claimed_delta_pos == 4);
    CHECK(degree_profile(h).delta_pos_codeg == 4);
    bool claims_no_pm = false;
    for (const auto& a : sheet.claimed_absences)
        if (a.structure == "perfect-matching") claims_no_pm = true;
    CHECK(claims_no_pm);

    // pairs inside U are universal, pairs inside V dead
    CHECK(codegree(h, {0, 1}) == 7);
    CHECK(codegree(h, {6, 7}) == 0);
}

TEST_CASE("make_huv across uniformities") {
    auto [h2, s2] = make_huv(2, 6, 4);
    CHECK(degree_profile(h2).delta_pos_codeg == 2);
    bool no_hc = false, no_pm = false;
    for (const auto& a : s2.claimed_absences) {
        if (a.structure == "berge-hc") no_hc = true;
        if (a.structure == "perfect-matching") no_pm = true;
    }
    CHECK(no_hc);
    CHECK(no_pm);

    auto [h4, s4] = make_huv(4, 10, 4);
    CHECK(s4.claimed_delta_pos == 6 - 2);
    CHECK(degree_profile(h4).delta_pos_codeg == 4);

    CHECK_THROWS_AS(make_huv(3, 5, 4), std::invalid_argument);  // U too small
}

TEST_CASE("complete graphs") {
    CHECK(complete(3, 4).edge_count() == 4);
    CHECK(complete(2, 3).edge_count() == 3);
    CHECK(degree_profile(complete(3, 6)).delta_pos_codeg == 4);
    CHECK_THROWS_AS(complete(3, 2), std::invalid_argument);
}

TEST_CASE("two cliques") {
    auto [h12, s12] = two_cliques(12);
    CHECK(degree_profile(h12).delta_pos_codeg == 4);
    CHECK(s12.claimed_delta_pos == 4);

    auto [h6, s6] = two_cliques(6);
    CHECK(h6.edge_count() == 2);
    CHECK(has_perfect_matching(h6).verdict == Verdict::yes);
    CHECK(find_loose_hamiltonian_cycle(h6).verdict == Verdict::no);

    auto [h8, s8] = two_cliques(8);
    CHECK(find_berge_hamiltonian_cycle(h8).verdict == Verdict::no);

    CHECK_THROWS_AS(two_cliques(7), std::invalid_argument);
    CHECK_THROWS_AS(two_cliques(4), std::invalid_argument);
}

TEST_CASE("loose cycle graphs") {
    auto c3 = loose_cycle_graph(3, 3);
    CHECK(c3.vertex_count() == 6);
    CHECK(c3.edge_count() == 3);

    auto c43 = loose_cycle_graph(3, 2);
    CHECK(c43.vertex_count() == 4);
    CHECK(c43.edge_count() == 2);
}

TEST_CASE("sample_with_floor honours its contract") {
    CHECK(sample_with_floor(3, 7, 0, 1.0, 5) == complete(3, 7));
    CHECK(sample_with_floor(3, 7, 0, 0.0, 5).empty());
    // deterministic under a fixed seed
    CHECK(sample_with_floor(3, 9, 3, 0.7, 1) == sample_with_floor(3, 9, 3, 0.7, 1));
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto h = sample_with_floor(3, 9, 3, 0.7, seed);
        if (!h.empty()) CHECK(degree_profile(h).delta_pos_codeg >= 3);
    }
}
