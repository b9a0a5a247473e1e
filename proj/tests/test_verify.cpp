#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "indub/errors.hpp"
#include "indub/verify.hpp"

using namespace indub;

TEST_SUITE_BEGIN("verify");

TEST_CASE("catalogue") {
    std::set<std::string_view> names;
    for (const auto& c : claim_catalogue()) {
        CHECK(!c.summary.empty());
        names.insert(c.name);
    }
    CHECK(names.size() == claim_catalogue().size());
    CHECK(names.size() >= 12);
    CHECK_THROWS_AS(verify_claim("no-such-claim", cycle_graph(6), std::nullopt), PreconditionError);
    CHECK_THROWS_AS(verify_claim("partition-uniqueness", cycle_graph(6), std::nullopt), PreconditionError);
}

TEST_CASE("partition-free claims on the fixtures") {
    std::size_t applicable = 0;
    for (const auto& [name, g] : fixtures::extended_fixtures()) {
        for (const auto& c : claim_catalogue()) {
            if (c.needs_partition) continue;
            INFO(name << " " << c.name);
            const auto r = verify_claim(c.name, g, std::nullopt);
            if (!r.applicable) continue;
            ++applicable;
            CHECK(r.holds);
            for (const auto& [check, ok] : r.checks) {
                INFO(check);
                CHECK(ok);
            }
        }
    }
    CHECK(applicable >= 60);
}

TEST_CASE("applicability") {
    const auto petersen = fixtures::family("petersen");
    CHECK_FALSE(verify_claim("bipartite-minus-k", petersen, std::nullopt).applicable);
    CHECK_FALSE(verify_claim("four-eigenvalue-grid", petersen, std::nullopt).applicable);
    CHECK(verify_claim("distance-regular-branches", petersen, std::nullopt).applicable);
    CHECK(verify_claim("bipartite-minus-k", fixtures::family("crown:4"), std::nullopt).applicable);
    CHECK(verify_claim("four-eigenvalue-grid", fixtures::family("grid:3,4"), std::nullopt).applicable);
    CHECK_FALSE(
        verify_claim("idempotent-roundtrip", disjoint_union(cycle_graph(3), cycle_graph(3)), std::nullopt).applicable);
}

TEST_CASE("partition claims") {
    const auto c6 = cycle_graph(6);
    const Partition pairs({{0, 3}, {1, 4}, {2, 5}}, 6);
    const auto u = verify_claim("partition-uniqueness", c6, pairs);
    CHECK(u.applicable);
    CHECK(u.holds);
    const auto t = verify_claim("three-class-scheme", c6, pairs);
    CHECK(t.applicable);
    CHECK(t.holds);

    const auto k44 = complete_multipartite({4, 4});
    const auto nonfull = verify_claim("partition-uniqueness", k44, Partition({{0, 4}, {1, 5}, {2, 6}, {3, 7}}, 8));
    CHECK_FALSE(nonfull.applicable);

    const auto g = coclique_extension(fixtures::family("grid:3,3"), 2);
    std::vector<std::vector<Vertex>> cells(3);
    for (Vertex x = 0; x < 18; ++x) cells[((x / 2) % 3 + 3 - (x / 2) / 3) % 3].push_back(x);
    const auto neg = verify_claim("three-class-scheme", g, Partition(cells, 18));
    CHECK(neg.applicable);
    CHECK(neg.holds);

    const auto not_indubitable = verify_claim("three-class-scheme", c6, Partition({{0, 1}, {2, 3}, {4, 5}}, 6));
    CHECK_FALSE(not_indubitable.applicable);
}

TEST_CASE("claims over the regular corpus (property)") {
    std::map<std::string, std::size_t> applicable;
    for (const auto& line : fixtures::read_lines("regular100.g6")) {
        const auto g = parse_graph6(line);
        for (const std::string claim : {"idempotent-roundtrip", "two-valued-entries", "no-zero-partition",
                                  "simple-eigenvalue-diagonal", "parameter-identities", "bipartite-minus-k"}) {
            INFO(line << " " << claim);
            const auto r = verify_claim(claim, g, std::nullopt);
            if (!r.applicable) continue;
            ++applicable[claim];
            CHECK(r.holds);
        }
    }
    CHECK(applicable.size() == 6);
}
