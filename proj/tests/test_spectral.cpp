#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "selfsim/cuts.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/spectral.hpp"

#include "fixtures.hpp"

using namespace selfsim;

namespace {

ExplicitGraph materialized(const BaseGraph& base, const Bundle& bundle, int k) {
    return materialize(SelfSimilarSystem(base, bundle), k);
}

void check_trace_and_energy(const SpectrumMultiset& spectrum,
                            const ExplicitGraph& graph, double tol) {
    CHECK(spectrum.total_multiplicity() == graph.vertex_count());
    CHECK(std::abs(spectrum.trace()) <= tol);
    CHECK(std::abs(spectrum.energy() - 2.0 * static_cast<double>(graph.edge_count())) <= tol);
}

} // namespace

TEST_CASE("adjacency matrices") {
    const ExplicitGraph k2 = materialized(fixtures::complete(2), fixtures::matching(2), 1);
    const SymmetricMatrix m2 = adjacency_matrix(k2);
    CHECK(m2.order() == 2);
    CHECK(m2.at(0, 1) == 1.0);
    CHECK(m2.at(1, 0) == 1.0);
    CHECK(m2.at(0, 0) == 0.0);

    const ExplicitGraph k3 = materialized(fixtures::complete(3), fixtures::matching(3), 1);
    const SymmetricMatrix m3 = adjacency_matrix(k3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(m3.at(i, j) == (i == j ? 0.0 : 1.0));

    // Q2 is the 4-cycle 0-1-3-2-0.
    const ExplicitGraph q2 = materialized(fixtures::complete(2), fixtures::matching(2), 2);
    const SymmetricMatrix m4 = adjacency_matrix(q2);
    CHECK(m4.at(0, 1) == 1.0);
    CHECK(m4.at(0, 2) == 1.0);
    CHECK(m4.at(1, 3) == 1.0);
    CHECK(m4.at(2, 3) == 1.0);
    CHECK(m4.at(0, 3) == 0.0);
    CHECK(m4.at(1, 2) == 0.0);
}

TEST_CASE("numeric eigenvalues by Jacobi rotations") {
    const ExplicitGraph k2 = materialized(fixtures::complete(2), fixtures::matching(2), 1);
    const SpectrumMultiset s2 = eigenvalues_numeric(adjacency_matrix(k2));
    REQUIRE(s2.pairs.size() == 2);
    CHECK(s2.pairs[0].first == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s2.pairs[1].first == doctest::Approx(-1.0).epsilon(1e-10));

    for (int n : {3, 4, 5}) {
        const ExplicitGraph kn = materialized(fixtures::complete(n), fixtures::matching(n), 1);
        const SpectrumMultiset s = eigenvalues_numeric(adjacency_matrix(kn));
        REQUIRE(s.pairs.size() == 2);
        CHECK(s.pairs[0].first == doctest::Approx(n - 1.0).epsilon(1e-9));
        CHECK(s.pairs[0].second == 1);
        CHECK(s.pairs[1].first == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(s.pairs[1].second == static_cast<std::uint64_t>(n - 1));
        check_trace_and_energy(s, kn, 1e-6);
    }

    // Q3: eigenvalues k - 2j with binomial multiplicities.
    const ExplicitGraph q3 = materialized(fixtures::complete(2), fixtures::matching(2), 3);
    const SpectrumMultiset s8 = eigenvalues_numeric(adjacency_matrix(q3));
    REQUIRE(s8.pairs.size() == 4);
    const double expected_values[] = {3.0, 1.0, -1.0, -3.0};
    const std::uint64_t expected_mults[] = {1, 3, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(s8.pairs[i].first == doctest::Approx(expected_values[i]).epsilon(1e-8));
        CHECK(s8.pairs[i].second == expected_mults[i]);
    }
    check_trace_and_energy(s8, q3, 1e-6);

    // The all-zero matrix collapses to one eigenvalue.
    const ExplicitGraph edgeless = materialized(make_base_graph(3, {}),
                                                fixtures::matching(3), 1);
    const SpectrumMultiset z = eigenvalues_numeric(adjacency_matrix(edgeless));
    REQUIRE(z.pairs.size() == 1);
    CHECK(z.pairs[0].first == 0.0);
    CHECK(z.pairs[0].second == 3);

    CHECK_THROWS_AS(eigenvalues_numeric(adjacency_matrix(q3), 1e-10, 4), SizeLimitError);
}

TEST_CASE("closed spectrum for complete base with the loop matching") {
    for (int n : {2, 3, 4, 5}) {
        const SpectrumMultiset s = spectrum_matching_closed(n, 1);
        REQUIRE(s.pairs.size() == 2);
        CHECK(s.pairs[0].first == static_cast<double>(n - 1));
        CHECK(s.pairs[1].first == -1.0);
        CHECK(s.pairs[1].second == static_cast<std::uint64_t>(n - 1));
    }

    // n = 2, k = 3 is the Q3 spectrum.
    const SpectrumMultiset q3 = spectrum_matching_closed(2, 3);
    REQUIRE(q3.pairs.size() == 4);
    CHECK(q3.pairs[0] == std::pair<double, std::uint64_t>{3.0, 1});
    CHECK(q3.pairs[1] == std::pair<double, std::uint64_t>{1.0, 3});
    CHECK(q3.pairs[2] == std::pair<double, std::uint64_t>{-1.0, 3});
    CHECK(q3.pairs[3] == std::pair<double, std::uint64_t>{-3.0, 1});

    SUBCASE("matches the numeric oracle with identical multiplicities") {
        for (int n = 2; n <= 4; ++n) {
            const SelfSimilarSystem system(fixtures::complete(n), fixtures::matching(n));
            for (int k = 1; k <= 3; ++k) {
                const SpectrumMultiset closed = spectrum_matching_closed(n, k);
                const SpectrumMultiset numeric =
                    eigenvalues_numeric(adjacency_matrix(materialize(system, k)));
                CAPTURE(n);
                CAPTURE(k);
                CHECK(spectra_match(closed, numeric, 1e-8));
            }
        }
    }

    SUBCASE("spectral gap is n across all levels") {
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 6; ++k) {
                const SpectrumMultiset s = spectrum_matching_closed(n, k);
                CHECK(s.largest() - s.second_largest() == static_cast<double>(n));
            }
    }

    SUBCASE("multiplicities add up to n^k") {
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k <= 8; ++k)
                CHECK(spectrum_matching_closed(n, k).total_multiplicity() ==
                      power_count(n, k));
    }

    SUBCASE("top eigenvalue equals the regular degree (n-1)k") {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k)
                CHECK(spectrum_matching_closed(n, k).largest() ==
                      static_cast<double>((n - 1) * k));
    }
}

TEST_CASE("block recursion rules") {
    SUBCASE("matching rule rebuilds the closed spectrum") {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k)
                CHECK(spectra_match(spectrum_block_recursion(complete_graph_spectrum(n),
                                                             n, k, LevelRule::Matching),
                                    spectrum_matching_closed(n, k), 1e-12));
    }

    SUBCASE("corrected jstar rule reproduces the materialized spectra") {
        // n = 2: (K2, jstar) = (K2, J5), whose square is the 4-cycle.
        const SpectrumMultiset s2 = spectrum_block_recursion(
            complete_graph_spectrum(2), 2, 2, LevelRule::JStarCorrected);
        REQUIRE(s2.pairs.size() == 3);
        CHECK(s2.pairs[0] == std::pair<double, std::uint64_t>{2.0, 1});
        CHECK(s2.pairs[1] == std::pair<double, std::uint64_t>{0.0, 2});
        CHECK(s2.pairs[2] == std::pair<double, std::uint64_t>{-2.0, 1});

        for (int n : {2, 3}) {
            const SpectrumMultiset closed = spectrum_block_recursion(
                complete_graph_spectrum(n), n, 2, LevelRule::JStarCorrected);
            const ExplicitGraph graph =
                materialized(fixtures::complete(n), fixtures::jstar(n), 2);
            CHECK(spectra_match(closed, eigenvalues_numeric(adjacency_matrix(graph)), 1e-8));
        }

        // n = 3, k = 2 in closed form.
        const SpectrumMultiset s3 = spectrum_block_recursion(
            complete_graph_spectrum(3), 3, 2, LevelRule::JStarCorrected);
        REQUIRE(s3.pairs.size() == 3);
        CHECK(s3.pairs[0] == std::pair<double, std::uint64_t>{6.0, 1});
        CHECK(s3.pairs[1] == std::pair<double, std::uint64_t>{0.0, 6});
        CHECK(s3.pairs[2] == std::pair<double, std::uint64_t>{-3.0, 2});
    }

    SUBCASE("the reported jstar sequence disagrees with the graphs") {
        // At n = 2, k = 2 the sequence tops out at 1, the graph at 2.
        const std::vector<double> reported = jstar_reported_sequence(2, 2);
        CHECK(reported == std::vector<double>{1.0, -1.0, 1.0});
        const SpectrumMultiset numeric = eigenvalues_numeric(adjacency_matrix(
            materialized(fixtures::complete(2), fixtures::jstar(2), 2)));
        CHECK(numeric.largest() == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(numeric.largest() > reported[0] + 0.5);
    }
}

TEST_CASE("exact conductance by subset enumeration") {
    const ExplicitGraph k2 = materialized(fixtures::complete(2), fixtures::matching(2), 1);
    const CutReport r2 = conductance_exact(k2);
    CHECK(r2.conductance == Rational(1, 1));
    CHECK(r2.witness == std::vector<std::uint32_t>{0});

    const ExplicitGraph k4 = materialized(fixtures::complete(4), fixtures::matching(4), 1);
    const CutReport r4 = conductance_exact(k4);
    CHECK(r4.conductance == Rational(2, 1));
    CHECK(r4.witness == std::vector<std::uint32_t>{0, 1});

    const ExplicitGraph q2 = materialized(fixtures::complete(2), fixtures::matching(2), 2);
    const CutReport rq = conductance_exact(q2);
    CHECK(rq.conductance == Rational(1, 1));
    CHECK(rq.witness == std::vector<std::uint32_t>{0, 1});

    // Complete graphs: ceil(n/2), witnessed by the first floor(n/2) vertices.
    for (int n = 2; n <= 8; ++n) {
        const ExplicitGraph kn = materialized(fixtures::complete(n), fixtures::matching(n), 1);
        const CutReport r = conductance_exact(kn);
        CHECK(r.conductance == Rational((n + 1) / 2, 1));
        CHECK(r.witness.size() == static_cast<std::size_t>(n / 2));
    }

    // Disconnected graphs have conductance zero and a zero Cheeger floor.
    const ExplicitGraph two_edges = ExplicitGraph::from_edges(4, {{0, 1}, {2, 3}});
    const CutReport rd = conductance_exact(two_edges);
    CHECK(rd.conductance == Rational(0, 1));
    REQUIRE(rd.cheeger_lower.has_value());
    CHECK(*rd.cheeger_lower == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(
        conductance_exact(materialized(fixtures::complete(5), fixtures::matching(5), 2)),
        SizeLimitError);
}

TEST_CASE("cheeger bounds sandwich the exact conductance on regular graphs") {
    struct Fixture {
        const char* name;
        ExplicitGraph graph;
    };
    std::vector<Fixture> fixtures_list;
    fixtures_list.push_back({"q3", materialized(fixtures::complete(2), fixtures::matching(2), 3)});
    fixtures_list.push_back({"q4", materialized(fixtures::complete(2), fixtures::matching(2), 4)});
    fixtures_list.push_back({"k6", materialized(fixtures::complete(6), fixtures::matching(6), 1)});
    fixtures_list.push_back({"c6", materialized(fixtures::cycle(6), fixtures::matching(6), 1)});
    fixtures_list.push_back({"k3matching2", materialized(fixtures::complete(3), fixtures::matching(3), 2)});
    fixtures_list.push_back({"k4matching2", materialized(fixtures::complete(4), fixtures::matching(4), 2)});
    fixtures_list.push_back({"k3jstar2", materialized(fixtures::complete(3), fixtures::jstar(3), 2)});
    fixtures_list.push_back({"k2full2", materialized(fixtures::complete(2), fixtures::full(2), 2)});

    for (const auto& fixture : fixtures_list) {
        CAPTURE(fixture.name);
        REQUIRE(fixture.graph.is_regular());
        const CutReport report = conductance_exact(fixture.graph);
        REQUIRE(report.cheeger_lower.has_value());
        REQUIRE(report.cheeger_upper.has_value());
        CHECK(*report.cheeger_lower <= report.conductance.value() + 1e-9);
        CHECK(report.conductance.value() <= *report.cheeger_upper + 1e-9);
    }
}

TEST_CASE("expansion floors for the matching systems") {
    for (int n = 2; n <= 4; ++n) {
        const SelfSimilarSystem system(fixtures::complete(n), fixtures::matching(n));
        for (int k = 1; k <= 2; ++k) {
            const ExplicitGraph graph = materialize(system, k);
            const CutReport report = conductance_exact(graph);
            CAPTURE(n);
            CAPTURE(k);
            const bool at_least_half_n =
                2 * report.conductance.num >= static_cast<std::int64_t>(n) * report.conductance.den;
            CHECK(at_least_half_n);
            REQUIRE(report.cheeger_lower.has_value());
            CHECK(*report.cheeger_lower == doctest::Approx(n / 2.0).epsilon(1e-9));

            const Rational expansion = vertex_expansion_exact(graph);
            CHECK(expansion.value() > 1.0 / (2.0 * k));
        }
    }
}

TEST_CASE("vertex expansion basics") {
    const ExplicitGraph k2 = materialized(fixtures::complete(2), fixtures::matching(2), 1);
    CHECK(vertex_expansion_exact(k2) == Rational(1, 1));

    const ExplicitGraph q2 = materialized(fixtures::complete(2), fixtures::matching(2), 2);
    CHECK(vertex_expansion_exact(q2) == Rational(1, 1));

    // Non-regular input is rejected.
    const ExplicitGraph p3 = materialized(fixtures::path(3), fixtures::matching(3), 1);
    CHECK_THROWS_AS(vertex_expansion_exact(p3), std::invalid_argument);
}
