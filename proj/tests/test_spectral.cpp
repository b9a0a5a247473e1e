#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fixtures.hpp"
#include "indub/errors.hpp"
#include "indub/spectral.hpp"

using namespace indub;

namespace {

std::vector<double> expanded(const Spectrum& s)
{
    std::vector<double> out;
    for (const auto& c : s.classes) out.insert(out.end(), c.multiplicity, c.value);
    std::sort(out.begin(), out.end());
    return out;
}

void check_eigenvalues(const Graph& g, std::vector<double> expected)
{
    std::sort(expected.begin(), expected.end());
    const auto got = expanded(spectrum(g));
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-10));
}

std::vector<double> cycle_eigenvalues(std::size_t n)
{
    std::vector<double> out;
    for (std::size_t j = 0; j < n; ++j)
        out.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)));
    return out;
}

std::vector<double> complete_eigenvalues(std::size_t n)
{
    std::vector<double> out(n - 1, -1.0);
    out.push_back(static_cast<double>(n - 1));
    return out;
}

std::vector<double> pairwise_sums(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> out;
    for (double x : a)
        for (double y : b) out.push_back(x + y);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("spectra against closed forms") {
    SUBCASE("cycles") {
        for (std::size_t n = 3; n <= 13; ++n) check_eigenvalues(cycle_graph(n), cycle_eigenvalues(n));
    }
    SUBCASE("complete graphs") {
        for (std::size_t n = 2; n <= 7; ++n) check_eigenvalues(complete_graph(n), complete_eigenvalues(n));
    }
    SUBCASE("K4,4 is [4]^1 [0]^6 [-4]^1") {
        const auto s = spectrum(complete_multipartite({4, 4}));
        CHECK(fixtures::integral_spectrum(s) == std::map<long long, std::size_t>{{4, 1}, {0, 6}, {-4, 1}});
    }
    SUBCASE("cartesian products add eigenvalues") {
        check_eigenvalues(fixtures::family("grid:3,4"), pairwise_sums(complete_eigenvalues(3), complete_eigenvalues(4)));
        check_eigenvalues(cartesian_product(cycle_graph(4), complete_graph(5)),
                          pairwise_sums(cycle_eigenvalues(4), complete_eigenvalues(5)));
        check_eigenvalues(cartesian_product(cycle_graph(5), cycle_graph(3)),
                          pairwise_sums(cycle_eigenvalues(5), cycle_eigenvalues(3)));
    }
    SUBCASE("bipartite double is the spectrum and its negative") {
        const auto base = expanded(spectrum(complete_multipartite({2, 2, 2})));
        std::vector<double> both = base;
        for (double x : base) both.push_back(-x);
        check_eigenvalues(bipartite_double(complete_multipartite({2, 2, 2})), both);
    }
    SUBCASE("Petersen") {
        CHECK(fixtures::integral_spectrum(spectrum(fixtures::family("petersen"))) ==
              std::map<long long, std::size_t>{{3, 1}, {1, 5}, {-2, 4}});
    }
    SUBCASE("complement of a k-regular graph: v-1-k and -1-theta") {
        const auto g = complement(fixtures::family("grid:2,5"));
        std::vector<double> expected{static_cast<double>(10 - 1 - 5)};
        const auto s = spectrum(fixtures::family("grid:2,5"));
        for (std::size_t c = 1; c < s.classes.size(); ++c)
            expected.insert(expected.end(), s.classes[c].multiplicity, -1.0 - s.classes[c].value);
        check_eigenvalues(g, expected);
    }
}

TEST_CASE("spectrum structure") {
    const auto s = spectrum(cycle_graph(6));
    REQUIRE(s.classes.size() == 4);
    CHECK(s.classes.front().value == doctest::Approx(2.0));
    for (std::size_t i = 1; i < s.classes.size(); ++i) CHECK(s.classes[i - 1].value > s.classes[i].value);
    CHECK(s.order() == 6);
    CHECK(s.all_integral());
    CHECK(s.find_class(-1.0 + 1e-12).has_value());
    CHECK_FALSE(s.find_class(0.5).has_value());
    CHECK(s.classes[1].integer_value == 1);
    CHECK_FALSE(spectrum(cycle_graph(5)).all_integral());
    CHECK_FALSE(s.ambiguous);
}

TEST_CASE("idempotent invariants on fixtures") {
    for (const auto& [name, g] : fixtures::extended_fixtures()) {
        INFO(name);
        const auto s = spectrum(g);
        const auto n = static_cast<Eigen::Index>(g.order());
        RealMatrix sum = RealMatrix::Zero(n, n);
        RealMatrix recon = RealMatrix::Zero(n, n);
        std::vector<RealMatrix> es;
        for (std::size_t c = 0; c < s.classes.size(); ++c) {
            const auto e = spectral_idempotent(g, s, c);
            const auto r = idempotent_residuals(e, g.real_adjacency());
            CHECK(r.square < 1e-10);
            CHECK(r.eigen < 1e-10);
            CHECK(r.trace < 1e-10);
            CHECK(max_abs(e.matrix - e.matrix.transpose()) < 1e-12);
            sum += e.matrix;
            recon += e.eigenvalue * e.matrix;
            es.push_back(e.matrix);
        }
        CHECK(max_abs(sum - RealMatrix::Identity(n, n)) < 1e-10);
        CHECK(max_abs(recon - g.real_adjacency()) < 1e-10);
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) CHECK(max_abs(es[i] * es[j]) < 1e-10);
        // degree class is J / v for connected regular graphs
        CHECK(max_abs(es.front() - RealMatrix::Constant(n, n, 1.0 / static_cast<double>(n))) < 1e-10);
    }
}

TEST_CASE("entry classes") {
    SUBCASE("J / v has one class") {
        const auto c = entry_classes(RealMatrix::Constant(5, 5, 0.2));
        CHECK(c.values.size() == 1);
        CHECK(c.class_matrix.isZero());
    }
    SUBCASE("E_-4 of K4,4 has classes -1/8, 1/8") {
        const auto g = complete_multipartite({4, 4});
        const auto s = spectrum(g);
        const auto e = spectral_idempotent(g, s, *s.find_class(-4.0));
        const auto c = entry_classes(e.matrix);
        REQUIRE(c.values.size() == 2);
        CHECK(c.values[0] == doctest::Approx(-1.0 / 8));
        CHECK(c.values[1] == doctest::Approx(1.0 / 8));
        CHECK(c.max_spread < 1e-12);
        CHECK(hadamard_dim(e) == 2);
    }
    SUBCASE("E_1 of Petersen has three classes") {
        const auto g = fixtures::family("petersen");
        const auto s = spectrum(g);
        const auto e = spectral_idempotent(g, s, *s.find_class(1.0));
        CHECK(entry_classes(e.matrix).values.size() == 3);
        CHECK(hadamard_dim(e) == 3);
        CHECK(hadamard_span_oracle({e.matrix}, 4) == 3);
    }
    SUBCASE("single linkage chains small gaps") {
        RealMatrix m(1, 4);
        m << 0.0, 0.6e-9, 1.2e-9, 1.0;
        const auto c = entry_classes(m);
        CHECK(c.values.size() == 2);
        CHECK(c.class_matrix(0, 0) == c.class_matrix(0, 2));
        CHECK(c.class_matrix(0, 3) != c.class_matrix(0, 0));
    }
    SUBCASE("degree class has hadamard_dim 1") {
        for (const auto& [name, g] : fixtures::named_fixtures()) {
            INFO(name);
            CHECK(hadamard_dim(spectral_idempotent(g, 0)) == 1);
        }
    }
}

TEST_CASE("span oracle") {
    const auto k44 = complete_multipartite({4, 4});
    const auto s = spectrum(k44);
    const auto e = spectral_idempotent(k44, s, *s.find_class(-4.0));
    CHECK(hadamard_span_oracle({e.matrix}, 3) == 2);
    CHECK(hadamard_span_oracle({RealMatrix::Constant(8, 8, 1.0 / 8)}, 5) == 1);
    CHECK(hadamard_span_oracle({RealMatrix::Constant(8, 8, 1.0 / 8)}, 0) == 1);
    // two generators: the span of both algebras
    const auto e0 = spectral_idempotent(k44, s, *s.find_class(0.0));
    const auto both = hadamard_span_oracle({e.matrix, e0.matrix}, 6);
    CHECK(both >= hadamard_dim(e0));
    CHECK_THROWS_AS(hadamard_span_oracle({}, 3), PreconditionError);
    CHECK_THROWS_AS(hadamard_span_oracle({e.matrix, RealMatrix::Zero(2, 2)}, 3), PreconditionError);

    SUBCASE("agrees with hadamard_dim on every fixture idempotent") {
        for (const auto& [name, g] : fixtures::extended_fixtures()) {
            const auto sp = spectrum(g);
            for (std::size_t c = 0; c < sp.classes.size(); ++c) {
                INFO(name << " class " << c);
                const auto ec = spectral_idempotent(g, sp, c);
                const auto d = hadamard_dim(ec);
                CHECK(hadamard_span_oracle({ec.matrix}, d) == d);
                CHECK(hadamard_span_oracle({ec.matrix}, d + 3) == d);
            }
        }
    }
}

TEST_CASE("two-valued decomposition") {
    SUBCASE("K4,4 at -4: K = I2 (x) J4") {
        const auto g = complete_multipartite({4, 4});
        const auto s = spectrum(g);
        const auto d = two_valued_decomposition(spectral_idempotent(g, s, *s.find_class(-4.0)), 8);
        REQUIRE(d);
        CHECK(d->theta0 == doctest::Approx(1.0 / 8).epsilon(1e-12));
        CHECK(d->theta1 == doctest::Approx(-1.0 / 8).epsilon(1e-12));
        CHECK(d->K == kron(int_identity(2), int_ones(4)));
        CHECK(d->rank == 1);
        CHECK(d->classes == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {4, 5, 6, 7}});
    }
    SUBCASE("C6 at -1: three classes of size two") {
        const auto g = cycle_graph(6);
        const auto s = spectrum(g);
        const auto d = two_valued_decomposition(spectral_idempotent(g, s, *s.find_class(-1.0)), 6);
        REQUIRE(d);
        CHECK(std::abs(d->theta0 - 2.0 / 6) < 1e-12);
        CHECK(std::abs(d->theta1 + 1.0 / 6) < 1e-12);
        CHECK(d->classes == std::vector<std::vector<Vertex>>{{0, 3}, {1, 4}, {2, 5}});
    }
    SUBCASE("Petersen at 1: absent") {
        const auto g = fixtures::family("petersen");
        const auto s = spectrum(g);
        CHECK_FALSE(two_valued_decomposition(spectral_idempotent(g, s, *s.find_class(1.0)), 10));
    }
    SUBCASE("rejects nonzero row sums") {
        const auto g = cycle_graph(6);
        CHECK_THROWS_AS(two_valued_decomposition(spectral_idempotent(g, 0), 6), PreconditionError);
    }
    SUBCASE("two values but not an equivalence relation") {
        // K = adjacency of C4: right values and row sums, no reflexivity
        const RealMatrix k = cycle_graph(4).real_adjacency();
        Idempotent fake{(2.0 * k - RealMatrix::Ones(4, 4)) / 4.0, -2.0, 1};
        CHECK_THROWS_AS(two_valued_decomposition(fake, 4), StructuralViolation);
    }
    SUBCASE("two values with wrong magnitudes") {
        Idempotent fake{(2.0 * kron(RealMatrix::Identity(2, 2), RealMatrix::Ones(2, 2)) - RealMatrix::Ones(4, 4)) / 2.0,
                        0.0, 1};
        CHECK_THROWS_AS(two_valued_decomposition(fake, 4), StructuralViolation);
    }
}

TEST_CASE("two-valued decompositions are exact (property)") {
    std::vector<Graph> graphs;
    for (const auto& [name, g] : fixtures::extended_fixtures()) graphs.push_back(g);
    for (auto& g : fixtures::read_graph6_file("regular100.g6")) graphs.push_back(std::move(g));
    std::size_t successes = 0;
    for (const auto& g : graphs) {
        const auto s = spectrum(g);
        const auto v = g.order();
        for (std::size_t c = 1; c < s.classes.size(); ++c) {
            const auto e = spectral_idempotent(g, s, c);
            const auto d = two_valued_decomposition(e, v);
            if (!d) continue;
            ++successes;
            const auto m = s.classes[c].multiplicity;
            CHECK(std::abs(d->theta0 - static_cast<double>(m) / static_cast<double>(v)) < 1e-10);
            CHECK(std::abs(d->theta1 + 1.0 / static_cast<double>(v)) < 1e-10);
            CHECK(d->classes.size() == m + 1);
            for (const auto& cell : d->classes) CHECK(cell.size() * (m + 1) == v);
        }
    }
    CHECK(successes > 20);
}

TEST_CASE("rational validation") {
    for (const auto& [name, g] : fixtures::named_fixtures()) {
        INFO(name);
        const auto s = spectrum(g);
        if (!s.all_integral()) {
            CHECK_FALSE(rational_validation(g, s, 1, spectral_idempotent(g, s, 1)).applicable);
            continue;
        }
        for (std::size_t c = 0; c < s.classes.size(); ++c) {
            const auto e = spectral_idempotent(g, s, c);
            const auto r = rational_validation(g, s, c, e);
            REQUIRE(r.applicable);
            CHECK(r.valid);
            CHECK(max_abs(r.numerator.cast<double>() / static_cast<double>(r.denominator) - e.matrix) < 1e-9);
            // N / D is itself idempotent: N^2 = D N
            CHECK((r.numerator * r.numerator).eval() == (r.denominator * r.numerator).eval());
        }
    }
    const auto c5 = cycle_graph(5);
    const auto s5 = spectrum(c5);
    CHECK_FALSE(rational_validation(c5, s5, 1, spectral_idempotent(c5, s5, 1)).applicable);
}
