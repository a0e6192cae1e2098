#include <doctest.h>

#include <algorithm>
#include <set>

#include "eic/construct.hpp"
#include "eic/ei.hpp"
#include "eic/verify.hpp"
#include "golden.hpp"

using namespace eic;

TEST_CASE("even construction reproduces the known-good tables index-for-index") {
    CHECK(construct(24).hypergraph.edges == golden::table24);
    CHECK(construct(26).hypergraph.edges == golden::table26);
    CHECK(construct(28).hypergraph.edges == golden::table28);
    CHECK(construct(32).hypergraph.edges == golden::table32);
    CHECK(construct(34).hypergraph.edges == golden::table34);
}

TEST_CASE("group layout") {
    SUBCASE("n=24: three four-groups, all case III") {
        auto groups = group_layout(24);
        REQUIRE(groups.size() == 3);
        for (const GroupSpec& g : groups) {
            CHECK(g.kind == GroupKind::four);
            CHECK(g.tag == CaseTag::III);
        }
        CHECK(groups[0].base_edge_index == 1);
        CHECK(groups[1].base_edge_index == 5);
        CHECK(groups[2].base_edge_index == 9);
    }
    SUBCASE("n=30: three five-groups, all case I") {
        auto groups = group_layout(30);
        REQUIRE(groups.size() == 3);
        for (const GroupSpec& g : groups) {
            CHECK(g.kind == GroupKind::five);
            CHECK(g.tag == CaseTag::I);
        }
    }
    SUBCASE("n=28: five-group I, five-group II, four-group IV") {
        auto groups = group_layout(28);
        REQUIRE(groups.size() == 3);
        CHECK(groups[0].kind == GroupKind::five);
        CHECK(groups[0].tag == CaseTag::I);
        CHECK(groups[1].kind == GroupKind::five);
        CHECK(groups[1].tag == CaseTag::II);
        CHECK(groups[2].kind == GroupKind::four);
        CHECK(groups[2].tag == CaseTag::IV);
    }
    SUBCASE("bad input") {
        CHECK_THROWS_AS(group_layout(25), std::out_of_range);
        CHECK_THROWS_AS(group_layout(22), std::out_of_range);
    }
}

TEST_CASE("strong 3-uniform hypercycle") {
    auto out = strong_hypercycle3(5);
    CHECK(std::set<Hyperedge>(out.hypergraph.edges.begin(), out.hypergraph.edges.end()) ==
          std::set<Hyperedge>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}});

    auto out7 = strong_hypercycle3(7);
    CHECK(edge_intersection_hypergraph(out7.hypergraph).edges ==
          cycle_edges(CycleOrder::canonical(7)));

    CHECK_THROWS_AS(strong_hypercycle3(4), std::out_of_range);
}

TEST_CASE("EI of the 3-uniform hypercycle on 4 vertices is not C_4") {
    // n = 4 is below the hypercycle's range; build it by hand and evaluate
    Hypergraph h{4, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}}};
    CHECK(edge_intersection_hypergraph(h).edges != cycle_edges(CycleOrder::canonical(4)));
}

TEST_CASE("unchecked variants exhibit the known defects") {
    SUBCASE("lemma2 at n=24 produces the chord {2,13} from e2 and e7") {
        auto out = construct_even(24, EvenVariant::lemma2, true);
        Hyperedge cap;
        std::set_intersection(out.hypergraph.edges[1].begin(), out.hypergraph.edges[1].end(),
                              out.hypergraph.edges[6].begin(), out.hypergraph.edges[6].end(),
                              std::back_inserter(cap));
        CHECK(cap == Hyperedge{2, 13});
    }
    SUBCASE("lemma1 at n=16 produces {1,2,3} from e1 and e2") {
        auto out = construct_even(16, EvenVariant::lemma1, true);
        Hyperedge cap;
        std::set_intersection(out.hypergraph.edges[0].begin(), out.hypergraph.edges[0].end(),
                              out.hypergraph.edges[1].begin(), out.hypergraph.edges[1].end(),
                              std::back_inserter(cap));
        CHECK(cap == Hyperedge{1, 2, 3});
    }
    SUBCASE("lemma2 at n=16 produces {1,2,3} from e1 and e3") {
        auto out = construct_even(16, EvenVariant::lemma2, true);
        Hyperedge cap;
        std::set_intersection(out.hypergraph.edges[0].begin(), out.hypergraph.edges[0].end(),
                              out.hypergraph.edges[2].begin(), out.hypergraph.edges[2].end(),
                              std::back_inserter(cap));
        CHECK(cap == Hyperedge{1, 2, 3});
    }
    SUBCASE("checked entry points refuse small n") {
        CHECK_THROWS_AS(construct_even(16), std::out_of_range);
        CHECK_THROWS_AS(construct_even(22, EvenVariant::lemma1), std::out_of_range);
    }
}

TEST_CASE("odd construction surgery at n=25") {
    auto out = construct(25);
    REQUIRE(out.hypergraph.edges.size() == 13);
    CHECK(out.hypergraph.edges[1] == Hyperedge{2, 3, 16, 17, 18, 25});
    CHECK(out.hypergraph.edges[2] == Hyperedge{4, 5, 13, 14, 15, 25});
    CHECK(out.hypergraph.edges[12] == Hyperedge{3, 4, 25});
    for (size_t i : {size_t{0}, size_t{3}})
        CHECK(out.hypergraph.edges[i] == golden::table24[i]);
    for (size_t i = 4; i < 12; ++i) CHECK(out.hypergraph.edges[i] == golden::table24[i]);

    size_t size3 = 0;
    for (const Hyperedge& e : out.hypergraph.edges) size3 += e.size() == 3;
    CHECK(size3 == 1);

    // the rerouted cycle edges {3,25} and {25,4} come from the new hyperedge
    GenerationCertificate cert = generation_certificate(out.hypergraph);
    CHECK(cert.entries.at({3, 25}) == std::vector<std::pair<int, int>>{{2, 13}});
    CHECK(cert.entries.at({4, 25}) == std::vector<std::pair<int, int>>{{3, 13}});
}

TEST_CASE("small-n constructions") {
    auto out3 = construct(3);
    CHECK(out3.hypergraph.edges.size() == 4);
    CHECK(edge_intersection_hypergraph(out3.hypergraph).edges ==
          cycle_edges(CycleOrder::canonical(3)));

    auto out4 = construct(4);
    CHECK(out4.hypergraph.edges.size() == 5);
    CHECK(edge_intersection_hypergraph(out4.hypergraph).edges ==
          cycle_edges(CycleOrder::canonical(4)));

    auto out5 = construct(5);
    CHECK(out5.recipe == Recipe::hypercycle3);
    CHECK(out5.hypergraph.edges.size() == 5);

    CHECK_THROWS_AS(construct(2), std::out_of_range);
    CHECK_THROWS_AS(construct_small(24), std::out_of_range);
}

TEST_CASE("even-n outputs: first 3-sections tile the cycle and are not shared") {
    for (int n : {24, 26, 30, 32, 40, 50}) {
        auto out = construct_even(n);
        REQUIRE(out.first_sections.size() == out.hypergraph.edges.size());

        // every first section lies inside its hyperedge
        for (size_t i = 0; i < out.first_sections.size(); ++i)
            CHECK(std::includes(out.hypergraph.edges[i].begin(), out.hypergraph.edges[i].end(),
                                out.first_sections[i].begin(), out.first_sections[i].end()));

        // the n 3-sections (first and second of every hyperedge) are exactly
        // the n cyclic windows {i, i+1, i+2}
        std::set<Hyperedge> sections;
        for (size_t i = 0; i < out.hypergraph.edges.size(); ++i) {
            const Hyperedge& e = out.hypergraph.edges[i];
            Hyperedge second;
            std::set_difference(e.begin(), e.end(), out.first_sections[i].begin(),
                                out.first_sections[i].end(), std::back_inserter(second));
            CHECK_FALSE(sections.count(out.first_sections[i]));  // never shared
            CHECK_FALSE(sections.count(second));
            sections.insert(out.first_sections[i]);
            sections.insert(second);
        }
        std::set<Hyperedge> windows;
        for (int i = 1; i <= n; ++i)
            windows.insert(make_edge(
                {i, normalize_vertex(i + 1, n), normalize_vertex(i + 2, n)}));
        CHECK(sections == windows);
    }
}

TEST_CASE("lemma1 and lemma2 differ only by swapped second sections") {
    for (int n : {24, 28, 34, 40}) {
        auto a = construct_even(n, EvenVariant::lemma1, true);
        auto b = construct_even(n, EvenVariant::lemma2, true);
        REQUIRE(a.hypergraph.edges.size() == b.hypergraph.edges.size());
        REQUIRE(a.groups == b.groups);
        std::set<size_t> swapped;
        for (const GroupSpec& g : a.groups) {
            swapped.insert(g.base_edge_index + 1);  // 1-based index of e_{j+1}
            swapped.insert(g.base_edge_index + 2);  // and e_{j+2}
        }
        for (size_t i = 0; i < a.hypergraph.edges.size(); ++i) {
            if (swapped.count(i + 1))
                CHECK(a.hypergraph.edges[i] != b.hypergraph.edges[i]);
            else
                CHECK(a.hypergraph.edges[i] == b.hypergraph.edges[i]);
        }
    }
}

TEST_CASE("theorem-2 shape over a sample of the supported range") {
    for (int n : {24, 36, 38, 100, 202, 400}) {
        auto out = construct(n);
        CHECK(is_k_uniform(out.hypergraph, 6));
        CHECK(is_r_regular(out.hypergraph, 3));
        CHECK(out.hypergraph.edges.size() == static_cast<size_t>(n) / 2);
    }
    for (int n : {25, 37, 101, 399}) {
        auto out = construct(n);
        CHECK(is_r_regular(out.hypergraph, 3));
        CHECK(out.hypergraph.edges.size() == static_cast<size_t>(n + 1) / 2);
    }
}
