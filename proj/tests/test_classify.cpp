#include <doctest.h>

#include "fixtures.hpp"
#include "indub/classify.hpp"
#include "indub/errors.hpp"

using namespace indub;

TEST_SUITE_BEGIN("classify");

TEST_CASE("verdict names round trip") {
    for (auto v : {Verdict::bipartite, Verdict::complete_multipartite, Verdict::antipodal_cover, Verdict::grid,
                   Verdict::grid_complement, Verdict::bipartite_double_multipartite, Verdict::unclassified})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK_THROWS_AS(verdict_from_string("nonsense"), PreconditionError);
}

TEST_CASE("grid(3,4): four-eigenvalue classification") {
    const auto g = fixtures::family("grid:3,4");
    const auto s = spectrum(g);
    const auto c = classify_four_eigenvalue(g, s);
    CHECK(c.verdict == Verdict::grid);
    CHECK(c.shape == std::vector<std::size_t>{3, 4});
    CHECK(permuted(g, c.reordering) == g);
    CHECK(check_witness(g, c));
    for (const auto& name : {"two_two_valued_idempotents", "two_full_partitions", "co_edge_regular",
                             "grid_identified", "scheme_closed", "distinct_multiplicities"}) {
        INFO(name);
        CHECK(c.check(name));
    }
    SUBCASE("complement") {
        const auto h = complement(g);
        const auto ch = classify_four_eigenvalue(h, spectrum(h));
        CHECK(ch.verdict == Verdict::grid_complement);
        CHECK(check_witness(h, ch));
        CHECK(ch.check("scheme_closed"));
        CHECK(ch.check("distinct_multiplicities"));
    }
    SUBCASE("relabelled copies") {
        Permutation perm{7, 2, 11, 0, 5, 9, 1, 3, 10, 4, 8, 6};
        const auto h = permuted(g, perm);
        const auto ch = classify_four_eigenvalue(h, spectrum(h));
        CHECK(ch.verdict == Verdict::grid);
        CHECK(permuted(h, ch.reordering) == g);
    }
}

TEST_CASE("crown(4) is the complement of grid(2,5)") {
    const auto g = fixtures::family("crown:4");
    const auto c = classify_four_eigenvalue(g, spectrum(g));
    CHECK(c.verdict == Verdict::grid_complement);
    CHECK(c.shape == std::vector<std::size_t>{2, 5});
    CHECK(permuted(g, c.reordering) == complement(fixtures::family("grid:2,5")));
}

TEST_CASE("identify_grid") {
    const auto g = fixtures::family("grid:4,3");
    const auto w = identify_grid(g);
    REQUIRE(w);
    CHECK(w->verdict == Verdict::grid);
    CHECK(permuted(g, w->reordering) == fixtures::family("grid:" + std::to_string(w->shape[0]) + "," +
                                                     std::to_string(w->shape[1])));
    CHECK_FALSE(identify_grid(fixtures::family("grid:3,3")));
    CHECK_FALSE(identify_grid(fixtures::family("petersen")));
    CHECK_FALSE(identify_grid(cycle_graph(6)));
    CHECK(identify_grid(fixtures::family("grid:2,5")).has_value());
}

TEST_CASE("bipartite doubles of complete 3-partite graphs") {
    for (std::size_t s : {2u, 3u}) {
        const auto g = bipartite_double(complete_multipartite({s, s, s}));
        INFO("parts of size " << s);
        const auto sp = spectrum(g);
        const auto c = classify_bipartite_five_eigenvalue(g, sp);
        CHECK(c.verdict == Verdict::bipartite_double_multipartite);
        const auto k = static_cast<std::int64_t>(2 * s);
        REQUIRE(c.eigenvalue);
        CHECK(*c.eigenvalue * static_cast<std::int64_t>(c.multiplicity) == -k);
        CHECK(c.multiplicity == 2);
        CHECK(c.shape == std::vector<std::size_t>{3, s});
        CHECK(check_witness(g, c));
        CHECK(c.check("block_form"));
    }
}

TEST_CASE("distance-regular branches") {
    SUBCASE("crown(4)") {
        const auto g = fixtures::family("crown:4");
        const auto cs = classify_drg_full_partition(g, spectrum(g));
        REQUIRE(cs.size() == 2);
        std::set<Verdict> verdicts;
        for (const auto& c : cs) {
            CHECK(check_witness(g, c));
            verdicts.insert(c.verdict);
            if (c.eigenvalue == -1) CHECK(c.verdict == Verdict::antipodal_cover);
            if (c.eigenvalue == -4) CHECK(c.verdict == Verdict::bipartite);
        }
        CHECK(verdicts == std::set<Verdict>{Verdict::bipartite, Verdict::antipodal_cover});
    }
    SUBCASE("K3,3,3 is complete multipartite") {
        const auto g = complete_multipartite({3, 3, 3});
        // K3,3,3 has diameter 2 and valency 6
        const auto cs = classify_drg_full_partition(g, spectrum(g));
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].verdict == Verdict::complete_multipartite);
        CHECK(cs[0].shape == std::vector<std::size_t>{3, 3, 3});
        CHECK(check_witness(g, cs[0]));
    }
    SUBCASE("not distance-regular") {
        const auto g = fixtures::family("grid:3,4");
        CHECK_THROWS_AS(classify_drg_full_partition(g, spectrum(g)), PreconditionError);
        CHECK_THROWS_AS(classify_drg_full_partition(cycle_graph(6), spectrum(cycle_graph(6))), PreconditionError);
    }
}

TEST_CASE("tampered witnesses fail") {
    const auto g = fixtures::family("grid:3,4");
    auto c = classify_four_eigenvalue(g, spectrum(g));
    REQUIRE(check_witness(g, c));
    std::swap(c.reordering[0], c.reordering[5]);
    CHECK_FALSE(check_witness(g, c));
    auto d = classify_four_eigenvalue(g, spectrum(g));
    d.verdict = Verdict::grid_complement;
    CHECK_FALSE(check_witness(g, d));
}

TEST_CASE("mined negative and positive instances") {
    std::size_t seen = 0;
    for (const auto& m : fixtures::mined()) {
        if (m.check == "simple_diagonal") continue;
        ++seen;
        INFO(m.graph6 << " " << m.provenance);
        const auto g = parse_graph6(m.graph6);
        const auto s = spectrum(g);
        const auto expected = verdict_from_string(m.expected);
        if (m.check == "four_eigenvalue") {
            REQUIRE(s.classes.size() == 4);
            CHECK(classify_four_eigenvalue(g, s).verdict == expected);
        } else if (m.check == "bipartite_five_eigenvalue") {
            REQUIRE(s.classes.size() == 5);
            CHECK(classify_bipartite_five_eigenvalue(g, s).verdict == expected);
        } else if (m.check == "distance_regular") {
            const auto cs = classify_drg_full_partition(g, s);
            for (const auto& c : cs) {
                CHECK(c.verdict == expected);
                CHECK(check_witness(g, c));
            }
        } else {
            FAIL("unknown mined check " << m.check);
        }
    }
    CHECK(seen == 7);
}

TEST_CASE("every four-eigenvalue graph in the corpus classifies consistently (property)") {
    std::size_t four = 0;
    for (const auto& line : fixtures::read_lines("corpus1000.g6")) {
        const auto g = parse_graph6(line);
        const auto p = basic_profile(g);
        if (!p.connected || !p.regular_degree) continue;
        const auto s = spectrum(g);
        INFO(line);
        if (s.classes.size() == 4) {
            ++four;
            const auto c = classify_four_eigenvalue(g, s);
            CHECK(check_witness(g, c));
        }
        if (s.classes.size() == 5 && p.bipartition) CHECK(check_witness(g, classify_bipartite_five_eigenvalue(g, s)));
    }
    CHECK(four > 0);
}
