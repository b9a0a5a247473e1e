#include <doctest.h>

#include "fixtures.hpp"
#include "indub/errors.hpp"
#include "indub/oracle.hpp"

using namespace indub;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("extended-precision span oracle on fixtures") {
    for (const auto& [name, g] : fixtures::named_fixtures()) {
        INFO(name);
        const auto s = spectrum(g);
        const auto dims = hadamard_span_oracle_mp(g, s, g.order() * g.order(), 60);
        REQUIRE(dims.size() == s.classes.size());
        for (std::size_t c = 0; c < dims.size(); ++c) CHECK(dims[c] == hadamard_dim(spectral_idempotent(g, s, c)));
    }
}

TEST_CASE("extended-precision span oracle where double precision is too coarse") {
    // 14 vertices with idempotents of 91 and more distinct entries, some a few 1e-6 apart
    const auto g = parse_graph6("M@@cCUAGAg@AQ@CK?");
    const auto s = spectrum(g);
    const auto dims = hadamard_span_oracle_mp(g, s, g.order() * g.order());
    bool large = false;
    for (std::size_t c = 0; c < dims.size(); ++c) {
        const auto d = hadamard_dim(spectral_idempotent(g, s, c));
        CHECK(dims[c] == d);
        large = large || d >= 90;
    }
    CHECK(large);
}

TEST_CASE("max_power caps the dimension") {
    const auto g = fixtures::family("petersen");
    const auto s = spectrum(g);
    CHECK(hadamard_span_oracle_mp(g, s, 1, 50) == std::vector<std::size_t>{1, 2, 2});
    CHECK(hadamard_span_oracle_mp(g, s, 10, 50) == std::vector<std::size_t>{1, 3, 3});
    CHECK_THROWS_AS(hadamard_span_oracle_mp(g, s, 10, 10), PreconditionError);
}
