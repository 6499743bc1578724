#include <doctest.h>

#include "crossfam/errors.hpp"
#include "crossfam/generators.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/sampling.hpp"
#include "crossfam/solvers.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace crossfam;

TEST_CASE("intersecting: all 21 plane line pairs meet") {
    Family fano = gen_fano();
    CHECK(oracle::is_intersecting(fano));
    CHECK(is_intersecting(fano));
}

TEST_CASE("intersecting: disjoint edges and the K4 family fail") {
    CHECK(!is_intersecting(make_family(4, {{0, 1}, {2, 3}}, {})));
    CHECK(!is_intersecting(testsup::k4_family())); // {0,1} vs {2,3} within side A
}

TEST_CASE("cross-intersecting: K4 and the n=3 grid family") {
    CHECK(is_cross_intersecting(testsup::k4_family()));
    CHECK(is_cross_intersecting(gen_grid_transversal(3)));
}

TEST_CASE("cross-intersecting requires both sides non-empty") {
    CHECK(!is_cross_intersecting(gen_fano()));
    CHECK(!is_cross_intersecting(make_family(2, {}, {{0, 1}})));
}

TEST_CASE("sperner: uniform families always pass") {
    CHECK(is_sperner(gen_fano()));
    CHECK(is_sperner(gen_grid_transversal(3)));
}

TEST_CASE("sperner: strict containment across sides fails") {
    CHECK(!is_sperner(make_family(3, {{0, 1}}, {{0, 1, 2}})));
    // wrapping a triangle: every 2-edge sits inside the full set
    CHECK(!is_sperner(gen_wrap(testsup::cycle(3))));
}

TEST_CASE("critical: the n=3 grid family") {
    Family g = gen_grid_transversal(3);
    CHECK(oracle::is_critical(g));
    CHECK(is_critical(g));
    CHECK(!criticality_violation(g).has_value());
}

TEST_CASE("critical: padded family with m >= 1 is not critical") {
    Family p = gen_padded(3, 1);
    CHECK(!oracle::is_critical(p));
    CHECK(!is_critical(p));
    auto v = criticality_violation(p);
    REQUIRE(v.has_value());
    // re-check the witness against the definition
    const std::vector<Edge>& own = v->side == 'a' ? p.side_a : p.side_b;
    const std::vector<Edge>& other = v->side == 'a' ? p.side_b : p.side_a;
    const Edge& e = own[static_cast<std::size_t>(v->edge_index)];
    CHECK(e.contains(v->vertex));
    for (const Edge& o : other) CHECK((e & o) != Edge::single(v->vertex));
}

TEST_CASE("critical: a mirrored tight intersecting family") {
    // tau of the plane equals its uniformity 3, so (V, E, E) is critical
    Family fano = gen_fano();
    TauCertificate t = tau(fano.side_a);
    REQUIRE(t.value == 3);
    Family mirrored = make_family_edges(7, fano.side_a, fano.side_a);
    CHECK(oracle::is_critical(mirrored));
    CHECK(is_critical(mirrored));
}

TEST_CASE("critical needs non-empty sides") {
    CHECK_THROWS_AS(is_critical(gen_fano()), PreconditionError);
}

TEST_CASE("q_set on hand instances") {
    CHECK(q_set(gen_fano()) == std::set<int>{1});
    CHECK(q_set(make_family(4, {{0, 1}, {2, 3}}, {})) == std::set<int>{0});
    Family lifted = gen_simple_based(gen_disjoint_copies(gen_fano(), 2), 4);
    CHECK(oracle::q_set(lifted) == std::set<int>{0, 1, 2, 3});
    CHECK(q_set(lifted) == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("q_set requires two distinct edges") {
    CHECK_THROWS_AS(q_set(make_family(2, {{0, 1}}, {})), PreconditionError);
    CHECK_THROWS_AS(q_set(make_family(2, {{0, 1}}, {{0, 1}})), PreconditionError);
}

TEST_CASE("exceptional structure: K4") {
    auto s = exceptional_structure(testsup::k4_family());
    REQUIRE(s.has_value());
    CHECK(s->m == 2);
    CHECK(s->l == 2);
    CHECK(s->part_m == Edge{0, 1});
    CHECK(s->part_u == Edge{2, 3});
    CHECK(s->big_side == 'a');
}

TEST_CASE("exceptional structure: m=2, l=3 and the flipped orientation") {
    Family f = make_family(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}},
                           {{0, 1}, {2, 3, 4}});
    auto s = exceptional_structure(f);
    REQUIRE(s.has_value());
    CHECK(s->m == 2);
    CHECK(s->l == 3);
    CHECK(s->big_side == 'b');
}

TEST_CASE("exceptional structure rejects near misses") {
    CHECK(!exceptional_structure(make_family_edges(7, gen_fano().side_a, gen_fano().side_a)));
    // missing one cross pair
    CHECK(!exceptional_structure(make_family(4, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}})));
    // big edges overlap
    CHECK(!exceptional_structure(make_family(3, {{0, 1}, {1, 2}}, {{0, 1}, {0, 2}, {1, 2}})));
    // spare vertex outside the partition
    CHECK(!exceptional_structure(
        make_family(5, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})));
}

TEST_CASE("exceptional structure is recognized under any vertex relabeling") {
    // The candidate bipartition comes from the big edges themselves, so
    // scattered (non-contiguous) parts must be recognized too.
    testsup::Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        int m = rng.bounded(2, 4), l = rng.bounded(2, 4);
        int n = m + l;
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.bounded(0, i))]);

        Edge p, u;
        for (int i = 0; i < m; ++i) p.add(perm[static_cast<std::size_t>(i)]);
        for (int i = m; i < n; ++i) u.add(perm[static_cast<std::size_t>(i)]);
        std::vector<Edge> cross;
        p.for_each([&](int pv) { u.for_each([&](int uv) { cross.push_back(Edge{pv, uv}); }); });

        bool flip = rng.bounded(0, 1) == 1;
        Family f = flip ? make_family_edges(n, std::move(cross), {p, u})
                        : make_family_edges(n, {p, u}, std::move(cross));
        auto s = exceptional_structure(f);
        REQUIRE(s.has_value());
        CHECK(s->big_side == (flip ? 'b' : 'a'));
        CHECK(std::multiset<int>{s->m, s->l} == std::multiset<int>{m, l});
        CHECK((s->part_m | s->part_u) == Edge::full(n));
    }
}

TEST_CASE("mirrored families are cross-intersecting exactly when intersecting") {
    testsup::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int u = rng.bounded(2, 7);
        std::vector<Edge> edges = rng.edge_list(u, rng.bounded(1, 5), 1, 3);
        Family plain = make_family_edges(u, edges, {});
        Family mirrored = make_family_edges(u, edges, edges);
        CHECK(is_cross_intersecting(mirrored) == is_intersecting(plain));
    }
}

TEST_CASE("q_set stays within [0, max edge size]") {
    testsup::Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        int u = rng.bounded(2, 8);
        Family f = make_family_edges(u, rng.edge_list(u, rng.bounded(2, 5), 1, 4),
                                     rng.edge_list(u, rng.bounded(0, 3), 1, 4));
        if (union_edges(f).size() < 2) continue;
        std::set<int> q = q_set(f);
        CHECK(q == oracle::q_set(f));
        for (int v : q) {
            CHECK(v >= 0);
            CHECK(v <= max_edge_size(f));
        }
    }
}

TEST_CASE("a vertex-disjoint union puts 0 into q_set") {
    CHECK(q_set(gen_disjoint_copies(gen_fano(), 2)).count(0) == 1);
}

TEST_CASE("critical families are cross-intersecting") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Family f = random_critical_family(seed);
        CHECK(is_cross_intersecting(f));
    }
}

TEST_CASE("exceptional families have m*l + 2 distinct edges and chi 4") {
    for (const Family& f :
         {testsup::k4_family(), gen_grid_transversal(2),
          make_family(5, {{0, 1}, {2, 3, 4}}, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})}) {
        auto s = exceptional_structure(f);
        REQUIRE(s.has_value());
        CHECK(union_edges(f).size() ==
              static_cast<std::size_t>(s->m * s->l) + 2);
        CHECK(chi(f).value == 4);
        CHECK(oracle::chi(f) == 4);
    }
}

TEST_CASE("analyze matches the individual predicates") {
    Family g = gen_grid_transversal(3);
    AnalysisReport r = analyze(g);
    CHECK(r.is_intersecting == is_intersecting(g));
    CHECK(r.is_cross_intersecting);
    CHECK(r.is_sperner);
    CHECK(r.uniform == 3);
    CHECK(r.is_critical);
    CHECK(!r.exceptional);
    CHECK(r.max_edge_size == 3);
    CHECK(r.a_count == 3);
    CHECK(r.b_count == 27);
    CHECK(r.q_set == q_set(g));

    AnalysisReport empty = analyze(make_family(0, {}, {}));
    CHECK(!empty.uniform.has_value());
    CHECK(empty.q_set.empty());
    CHECK(!empty.is_critical);
}
