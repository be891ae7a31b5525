#include <doctest.h>

#include <algorithm>
#include <random>

#include "brute_force.hpp"
#include "decycle/constructions.hpp"
#include "decycle/errors.hpp"
#include "decycle/verifier.hpp"

using namespace decycle;

namespace {

// Closed cycle inside g - s: consecutive vertices adjacent, none deleted, distinct
// interior, closed by a repeated first vertex.
bool valid_cycle(const Graph& g, const VertexSet& s, const std::vector<Vertex>& cyc) {
    if (cyc.size() < 4 || cyc.front() != cyc.back())
        return false;
    std::vector<Vertex> interior(cyc.begin(), cyc.end() - 1);
    std::ranges::sort(interior);
    if (std::ranges::adjacent_find(interior) != interior.end())
        return false;
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
        if (!g.adjacent(cyc[i], cyc[i + 1]) || s.contains(cyc[i]))
            return false;
    return true;
}

VertexSet from_mask(int n, brute::Mask deleted) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (brute::in(deleted, v))
            s.insert(v);
    return s;
}

std::vector<Graph> small_grid() {
    std::vector<Graph> out;
    for (int n = 3; n <= 12; ++n)
        out.push_back(make_cycle(n));
    out.push_back(realize(make_family(C3xCn{3})));
    out.push_back(realize(make_family(C3xCn{4})));
    for (int n = 4; n <= 12; ++n)
        out.push_back(realize(make_family(CnPow2{n})));
    for (int n = 5; n <= 12; ++n)
        out.push_back(realize(make_family(CnPow3{n})));
    for (int n = 9; n <= 12; ++n)
        out.push_back(make_cycle_power(n, 4));
    return out;
}

}  // namespace

TEST_CASE("residual examples") {
    SUBCASE("one deletion breaks a cycle") {
        auto r = residual(make_cycle(5), VertexSet(5, {0}));
        CHECK(r.is_forest);
        CHECK(r.is_path());
        CHECK(r.n_vertices_left == 4);
        CHECK(r.n_edges_left == 3);
        CHECK_FALSE(r.witness_cycle);
    }
    SUBCASE("C3 x C3 with nothing deleted has a triangle") {
        auto g = realize(make_family(C3xCn{3}));
        auto r = residual(g, VertexSet(9));
        CHECK_FALSE(r.is_forest);
        REQUIRE(r.witness_cycle);
        CHECK(r.witness_cycle->size() == 4);
        CHECK(valid_cycle(g, VertexSet(9), *r.witness_cycle));
    }
    SUBCASE("C9^2 minus {0,3,6,8} is the path 1-2-4-5-7") {
        auto g = make_cycle_power(9, 2);
        VertexSet s(9, {0, 3, 6, 8});
        auto r = residual(g, s);
        CHECK(r.is_forest);
        CHECK(r.is_path());
        CHECK(r.n_vertices_left == 5);
        CHECK(r.n_edges_left == 4);
        for (auto [u, v] : std::vector<Edge>{{1, 2}, {2, 4}, {4, 5}, {5, 7}})
            CHECK(g.adjacent(u, v));
        CHECK_FALSE(g.adjacent(1, 4));
        CHECK_FALSE(g.adjacent(2, 5));
    }
    CHECK_THROWS_AS(residual(make_cycle(5), VertexSet(6)), InvalidInput);
}

TEST_CASE("is_unicyclic") {
    SUBCASE("row pattern on C3 x C4") {
        auto g = realize(make_family(C3xCn{4}));
        auto s = c3xn_row_pattern(4);
        auto u = is_unicyclic(g, s);
        CHECK(u.unicyclic);
        REQUIRE(u.cycle);
        CHECK(valid_cycle(g, s, *u.cycle));
    }
    SUBCASE("a cycle is unicyclic") {
        auto u = is_unicyclic(make_cycle(5), VertexSet(5));
        CHECK(u.unicyclic);
        REQUIRE(u.cycle);
        CHECK(u.cycle->size() == 6);
    }
    SUBCASE("C4 x C4 is not") {
        auto u = is_unicyclic(realize(make_family(C4xCn{4})), VertexSet(16));
        CHECK_FALSE(u.unicyclic);
        CHECK_FALSE(u.cycle);
    }
    SUBCASE("two disjoint cycles are not") {
        std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
        CHECK_FALSE(is_unicyclic(Graph(6, e), VertexSet(6)).unicyclic);
    }
}

TEST_CASE("verify_certificate") {
    SUBCASE("Cn^2, n = 10") {
        auto spec = make_family(CnPow2{10});
        DecyclingCertificate c{spec, VertexSet(10, {0, 3, 6, 9}), 4, 4, "theorem-4", CertificateStatus::unverified};
        auto out = verify_certificate(c);
        CHECK(out.certificate.status == CertificateStatus::verified);
        CHECK(out.certificate.is_tight());
        CHECK(out.failures.empty());
    }
    SUBCASE("claimed cardinality disagrees with the set") {
        auto spec = make_family(CnPow2{10});
        DecyclingCertificate c{spec, VertexSet(10, {0, 3, 6, 9}), 3, 3, "tampered", CertificateStatus::verified};
        auto out = verify_certificate(c);
        CHECK(out.certificate.status == CertificateStatus::failed);
        CHECK(out.failures.size() == 1);
    }
    SUBCASE("Cn^3, n = 8") {
        auto spec = make_family(CnPow3{8});
        DecyclingCertificate c{spec, VertexSet(8, {0, 1, 2, 4, 6}), 5, 5, "theorem-5", CertificateStatus::unverified};
        auto out = verify_certificate(c);
        CHECK(out.certificate.status == CertificateStatus::verified);
        CHECK(out.residual.is_path());
        CHECK(out.residual.n_vertices_left == 3);
        auto g = realize(spec);
        CHECK(g.adjacent(3, 5));
        CHECK(g.adjacent(5, 7));
        CHECK_FALSE(g.adjacent(3, 7));
    }
    SUBCASE("lower bound above the set size fails") {
        auto spec = make_family(CnPow2{10});
        DecyclingCertificate c{spec, VertexSet(10, {0, 3, 6, 9}), 4, 5, "x", CertificateStatus::unverified};
        CHECK(verify_certificate(c).certificate.status == CertificateStatus::failed);
    }
    SUBCASE("residual cycle fails and leaves the set alone") {
        auto spec = make_family(CnPow2{10});
        DecyclingCertificate c{spec, VertexSet(10, {0, 3, 6}), 3, 3, "x", CertificateStatus::unverified};
        auto first = verify_certificate(c);
        CHECK(first.certificate.status == CertificateStatus::failed);
        CHECK(first.certificate.set == c.set);
        REQUIRE(first.residual.witness_cycle);
        auto second = verify_certificate(first.certificate);
        CHECK(second.certificate == first.certificate);
    }
    SUBCASE("graph from another family is rejected") {
        auto spec = make_family(CnPow2{10});
        DecyclingCertificate c{spec, VertexSet(10, {0, 3, 6, 9}), 4, 4, "x", CertificateStatus::unverified};
        CHECK_THROWS_AS(verify_certificate(make_cycle_power(10, 3), c), InvalidInput);
        CHECK_THROWS_AS(verify_certificate(make_cycle(12), c), InvalidInput);
    }
}

TEST_CASE("forest test agrees with naive cycle search on every induced subgraph") {
    for (const auto& g : small_grid()) {
        const int n = g.size();
        CAPTURE(n);
        CAPTURE(g.n_edges());
        for (brute::Mask deleted = 0; deleted <= brute::full(n); ++deleted) {
            auto s = from_mask(n, deleted);
            auto r = residual(g, s);
            bool naive_cycle = brute::has_cycle_by_paths(g, brute::full(n) & ~deleted);
            REQUIRE(r.is_forest == !naive_cycle);
            REQUIRE(r.is_forest == brute::is_forest_union_find(g, brute::full(n) & ~deleted));
            REQUIRE(r.witness_cycle.has_value() == !r.is_forest);
            if (r.witness_cycle)
                REQUIRE(valid_cycle(g, s, *r.witness_cycle));
        }
    }
}

TEST_CASE("deleting more vertices keeps a forest a forest") {
    std::mt19937_64 rng(20261015);
    for (const auto& g : small_grid()) {
        const int n = g.size();
        for (int trial = 0; trial < 200; ++trial) {
            brute::Mask s = rng() & brute::full(n);
            brute::Mask t = s | (rng() & brute::full(n));
            if (residual(g, from_mask(n, s)).is_forest)
                CHECK(residual(g, from_mask(n, t)).is_forest);
        }
    }
}
