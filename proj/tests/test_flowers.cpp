#include <doctest.h>

#include "crossfam/errors.hpp"
#include "crossfam/flowers.hpp"
#include "crossfam/generators.hpp"
#include "crossfam/sampling.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace crossfam;

TEST_CASE("the plane is its own flower with 3 petals") {
    auto f = find_flower(gen_fano().side_a, 3);
    REQUIRE(f.has_value());
    CHECK(f->core.empty());
    CHECK(f->petals == 3);
    CHECK(f->tau_witness.value == 3);
}

TEST_CASE("k disjoint singletons form a flower with k petals and empty core") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i) edges.push_back(Edge::single(i));
        auto f = find_flower(edges, k);
        REQUIRE(f.has_value());
        CHECK(f->core.empty());
        CHECK(f->tau_witness.value == k);
    }
}

TEST_CASE("a 5-cycle (max size 2, 5 > (3-1)^2 edges) contains a 3-petal flower") {
    std::vector<Edge> edges = testsup::cycle(5).side_a;
    auto f = find_flower(edges, 3);
    REQUIRE(f.has_value());
    auto check = oracle::tau(restrict_edges(edges, f->core), 5);
    CHECK((!check.has_value() || *check >= 3));
}

TEST_CASE("a star forces a non-empty core") {
    std::vector<Edge> star;
    for (int i = 1; i <= 5; ++i) star.push_back(Edge{0, i});
    auto f = find_flower(star, 3);
    REQUIRE(f.has_value());
    CHECK(f->core == Edge{0});
    CHECK(f->tau_witness.value == 5); // the five leaves are disjoint singletons
}

TEST_CASE("no flower in an empty edge list") {
    CHECK(!find_flower({}, 1).has_value());
}

TEST_CASE("an edge fully inside the core makes the witness infinite") {
    // peeling {0} then {1} strands the edge {0,1} as an empty image
    std::vector<Edge> edges{Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}};
    auto f = find_flower(edges, 4);
    REQUIRE(f.has_value());
    CHECK(f->tau_witness.at_least(4));
}

TEST_CASE("petal count below 1 is rejected") {
    CHECK_THROWS_AS(find_flower({Edge{0}}, 0), std::invalid_argument);
}

TEST_CASE("pigeonhole: dense edge sets always contain a flower") {
    // |E| = (k-1)^n + 1 over all n, k <= 3; certificates re-verified by the
    // subset-enumeration oracle.
    int ran = 0;
    for (std::uint64_t seed = 0; ran < 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 3);
        int k = 1 + static_cast<int>((seed / 3) % 3);
        std::size_t count = static_cast<std::size_t>(
            saturating_pow(static_cast<std::uint64_t>(k - 1), static_cast<std::uint64_t>(n)) + 1);
        std::vector<Edge> edges = random_edge_set(seed, n, count);
        auto f = find_flower(edges, k);
        REQUIRE(f.has_value());
        CHECK(f->petals == k);

        std::vector<Edge> res = restrict_edges(edges, f->core);
        auto expect = oracle::tau(res, 10);
        TauCertificate witness = tau(res);
        if (expect.has_value()) {
            CHECK(witness.value == expect);
            CHECK(*expect >= k);
        } else {
            CHECK(witness.infinite());
        }
        ++ran;
    }
}

TEST_CASE("saturating power") {
    CHECK(saturating_pow(3, 3) == 27);
    CHECK(saturating_pow(2, 2) == 4);
    CHECK(saturating_pow(0, 0) == 1);
    CHECK(saturating_pow(1, 100) == 1);
    CHECK(saturating_pow(16, 16) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("edge-bound report: the n=3 grid family is tight") {
    Theorem2Report r = check_theorem2(gen_grid_transversal(3));
    CHECK(r.n == 3);
    CHECK(r.bound == 27);
    CHECK(r.critical);
    CHECK(r.bound_holds);
    CHECK(r.margin == 0);
    CHECK(!r.flower.has_value());
    CHECK(!r.violation.has_value());
}

TEST_CASE("edge-bound report: K4 sits exactly on its bound too") {
    Theorem2Report r = check_theorem2(testsup::k4_family());
    CHECK(r.n == 2);
    CHECK(r.bound == 4);
    CHECK(r.critical);
    CHECK(r.margin == 0);
}

TEST_CASE("edge-bound report: an oversized side yields a flower and a violation") {
    // 5 star edges of size 2 against a single pair: n = 2, so side a
    // exceeds n^n = 4, and the family cannot be critical.
    std::vector<std::vector<int>> star;
    for (int i = 1; i <= 5; ++i) star.push_back({0, i});
    Family f = make_family(6, star, {{0, 1}});
    REQUIRE(is_cross_intersecting(f));

    Theorem2Report r = check_theorem2(f);
    CHECK(!r.critical);
    CHECK(!r.bound_holds);
    REQUIRE(r.flower.has_value());
    CHECK(r.flower->petals == 3);
    CHECK(r.flower->core == Edge{0});
    REQUIRE(r.violation.has_value());

    const std::vector<Edge>& own = r.violation->side == 'a' ? f.side_a : f.side_b;
    const std::vector<Edge>& other = r.violation->side == 'a' ? f.side_b : f.side_a;
    const Edge& e = own[static_cast<std::size_t>(r.violation->edge_index)];
    CHECK(e.contains(r.violation->vertex));
    for (const Edge& o : other) CHECK((e & o) != Edge::single(r.violation->vertex));
}

TEST_CASE("edge-bound report needs a cross-intersecting family") {
    CHECK_THROWS_AS(check_theorem2(gen_fano()), PreconditionError);
}

TEST_CASE("critical families generated at desk scale respect the bound") {
    for (std::uint64_t seed = 500; seed < 550; ++seed) {
        Family f = random_critical_family(seed);
        Theorem2Report r = check_theorem2(f);
        CHECK(r.critical);
        CHECK(r.bound_holds);
        REQUIRE(r.margin.has_value());
    }
}
