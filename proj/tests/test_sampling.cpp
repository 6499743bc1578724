#include <doctest.h>

#include "crossfam/predicates.hpp"
#include "crossfam/sampling.hpp"
#include "crossfam/verify.hpp"
#include "test_support.hpp"

using namespace crossfam;

TEST_CASE("samplers are deterministic in the seed") {
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
        CHECK(random_cross_sperner_family(seed) == random_cross_sperner_family(seed));
        CHECK(random_cross_sperner_min3_family(seed) ==
              random_cross_sperner_min3_family(seed));
        CHECK(random_critical_family(seed) == random_critical_family(seed));
        CHECK(random_edge_set(seed, 3, 9) == random_edge_set(seed, 3, 9));
    }
}

TEST_CASE("seeds actually vary the output") {
    bool differ = false;
    Family first = random_cross_sperner_family(0);
    for (std::uint64_t seed = 1; seed < 10 && !differ; ++seed)
        differ = !(random_cross_sperner_family(seed) == first);
    CHECK(differ);
}

TEST_CASE("cross-Sperner sampler hits its shape") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Family f = random_cross_sperner_family(seed);
        CHECK(is_cross_intersecting(f));
        CHECK(is_sperner(f));
        CHECK(!(f.side_a.front() == f.side_b.front()));
    }
}

TEST_CASE("min-size-3 sampler hits its shape") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Family f = random_cross_sperner_min3_family(seed);
        CHECK(is_cross_intersecting(f));
        CHECK(is_sperner(f));
        for (const Edge& e : union_edges(f)) CHECK(e.size() >= 3);
        for (const Edge& a : f.side_a)
            for (const Edge& b : f.side_b) CHECK(!(a == b));
    }
}

TEST_CASE("critical sampler hits its shape") {
    bool saw_multi_edge = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Family f = random_critical_family(seed);
        CHECK(is_critical(f));
        CHECK(max_edge_size(f) <= 3);
        saw_multi_edge = saw_multi_edge || union_edges(f).size() > 1;
    }
    CHECK(saw_multi_edge); // the suite must not consist of singleton families only
}

TEST_CASE("edge-set sampler: distinct edges with max size exactly n") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::vector<Edge> edges = random_edge_set(seed, 3, 9);
        CHECK(edges.size() == 9);
        int max_size = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            CHECK(!edges[i].empty());
            max_size = std::max(max_size, edges[i].size());
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                CHECK(!(edges[i] == edges[j]));
        }
        CHECK(max_size == 3);
    }
}

TEST_CASE("verification suites are reproducible and pass") {
    VerifyOptions opts;
    opts.trials = 30;
    opts.seed = 42;
    for (auto* suite : {&verify_prop1, &verify_thm1, &verify_thm2, &verify_lemma_flower}) {
        VerifyResult r1 = (*suite)(opts);
        VerifyResult r2 = (*suite)(opts);
        CHECK(r1.ok());
        CHECK(r1.failures == r2.failures);
        CHECK(r1.trials == 30);
    }
    CHECK(verify_thm3().ok());
}
