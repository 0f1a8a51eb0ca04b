#include <doctest.h>
#include <algorithm>
#include <functional>
#include <set>

#include "fixtures.hpp"
#include "isodecomp/io.hpp"
#include "isodecomp/polytope.hpp"

using namespace isodecomp;
using fixtures::columns;
using fixtures::q;
using fixtures::vec;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Parse;
}

// Each vertex satisfies every facet inequality, tight exactly on the listed
// incidences, and lies on at least n facets.
void check_invariants(const Polytope& p)
{
    for (Index v = 0; v < p.num_vertices(); ++v) {
        Index tight = 0;
        for (const auto& f : p.facets()) {
            const Rational s = f.normal.dot(p.vertex(v));
            const bool listed = std::binary_search(f.vertices.begin(), f.vertices.end(), v);
            CHECK(s <= f.offset);
            CHECK((s == f.offset) == listed);
            tight += listed ? 1 : 0;
        }
        CHECK(tight >= p.dim());
    }
}

} // namespace

TEST_CASE("hull of the 3-cube")
{
    const Polytope c = fixtures::cube(3);
    CHECK(c.num_vertices() == 8);
    CHECK(c.num_facets() == 6);
    CHECK(c.origin_interior());
    CHECK(c.is_simple());
    CHECK_FALSE(c.is_simplicial());
    for (const auto& f : c.facets()) {
        CHECK(f.vertices.size() == 4);
        CHECK(f.offset == 1);
    }
    check_invariants(c);
}

TEST_CASE("hull drops interior, duplicate and edge points")
{
    const Polytope s = hull_facets(columns({{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}, {2, 2}, {0, 1}}));
    CHECK(s.num_vertices() == 4);
    CHECK(s.num_facets() == 4);
    check_invariants(s);

    const Polytope t = hull_facets(columns({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 0}}));
    CHECK(t.num_vertices() == 4);
    CHECK(t.num_facets() == 4);
}

TEST_CASE("hull rejects flat point sets")
{
    CHECK(code_of([] { hull_facets(columns({{0, 0}, {1, 1}, {2, 2}})); }) == ErrorCode::NotFullDimensional);
    CHECK(code_of([] { hull_facets(columns({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}})); }) ==
          ErrorCode::NotFullDimensional);
}

TEST_CASE("segment")
{
    const Polytope s = hull_facets(columns({{-1}, {3}, {1}}));
    CHECK(s.num_vertices() == 2);
    CHECK(s.num_facets() == 2);
    CHECK(gauge_value(s, vec({q(3)})) == 1);
}

TEST_CASE("validate reports the violated invariant")
{
    const RMatrix sq = columns({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    auto facet = [](long a, long b, long off, std::vector<Index> vs) {
        return Facet{vec({q(a), q(b)}), q(off), std::move(vs)};
    };
    const std::vector<Facet> good = {facet(0, -1, 1, {0, 1}), facet(1, 0, 1, {1, 2}), facet(0, 1, 1, {2, 3}),
                                     facet(-1, 0, 1, {0, 3})};
    CHECK(validate(sq, good).num_facets() == 4);

    auto missing = good;
    missing.pop_back();
    CHECK(code_of([&] { validate(sq, missing); }) == ErrorCode::IncidenceMismatch);

    auto wrong_incidence = good;
    wrong_incidence[0].vertices = {0, 2};
    CHECK(code_of([&] { validate(sq, wrong_incidence); }) == ErrorCode::IncidenceMismatch);

    auto violated = good;
    violated[1].offset = q(1, 2);
    violated[1].normal = vec({q(1), q(0)});
    CHECK(code_of([&] { validate(sq, violated); }) != ErrorCode::Parse);

    auto short_normal = good;
    short_normal[2].normal = vec({q(1)});
    CHECK(code_of([&] { validate(sq, short_normal); }) == ErrorCode::DimensionMismatch);

    RMatrix dup = sq;
    dup.col(3) = dup.col(0);
    CHECK(code_of([&] { validate(dup, good); }) == ErrorCode::NotConvexPosition);

    const RMatrix with_midpoint = columns({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {0, -1}});
    auto mid = good;
    mid[0].vertices = {0, 1, 4};
    CHECK(code_of([&] { validate(with_midpoint, mid); }) == ErrorCode::NotConvexPosition);

    CHECK(code_of([] { validate(columns({{0, 0}, {1, 1}}), {}); }) == ErrorCode::NotFullDimensional);
}

TEST_CASE("facet normalization")
{
    const Polytope off = hull_facets(columns({{1, 1}, {3, 1}, {1, 2}}));
    CHECK_FALSE(off.origin_interior());
    for (const auto& f : off.facets()) {
        Index k = 0;
        while (f.normal(k) == 0) {
            ++k;
        }
        CHECK(abs(f.normal(k)) == 1);
    }
    const Polytope on = fixtures::centered_simplex(3);
    for (const auto& f : on.facets()) {
        CHECK(f.offset == 1);
    }
}

TEST_CASE("polar of cube is the cross-polytope and polarity is an involution")
{
    for (Index n = 2; n <= 4; ++n) {
        CHECK(same_body(polar(fixtures::cube(n)), fixtures::cross_polytope(n)));
        CHECK(same_body(polar(fixtures::cross_polytope(n)), fixtures::cube(n)));
    }
    fixtures::Rng rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const Index n = rng.uniform(2, 3);
        const Polytope p = fixtures::random_polytope(rng, n, rng.uniform(n + 1, 9), 4);
        check_invariants(p);
        const Polytope pp = polar(p);
        check_invariants(pp);
        CHECK(pp.num_vertices() == p.num_facets());
        CHECK(pp.num_facets() == p.num_vertices());
        CHECK(same_body(polar(pp), p));
    }
    CHECK(code_of([] { polar(fixtures::standard_simplex(2)); }) == ErrorCode::OriginNotInterior);
}

TEST_CASE("gauge and support functions")
{
    const Polytope c = fixtures::cube(2);
    CHECK(gauge_value(c, vec({q(3), q(-1)})) == 3);
    CHECK(gauge_value(c, vec({q(0), q(0)})) == 0);
    CHECK(support_value(c, vec({q(1), q(2)})) == 3);

    // gauge of P is the support function of its polar, at random points
    fixtures::Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const Polytope p = fixtures::random_polytope(rng, 3, 7, 3);
        const Polytope pp = polar(p);
        const RVector x = vec({q(rng.uniform(-5, 5), 3), q(rng.uniform(-5, 5), 2), q(rng.uniform(-5, 5))});
        CHECK(gauge_value(p, x) == support_value(pp, x));
        for (Index v = 0; v < p.num_vertices(); ++v) {
            CHECK(gauge_value(p, p.vertex(v)) == 1);
        }
    }
}

TEST_CASE("Minkowski sums add support functions")
{
    CHECK(same_body(minkowski_sum(fixtures::cube(2), fixtures::cube(2)), scaled(fixtures::cube(2), q(2))));
    fixtures::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = rng.uniform(2, 3);
        const Polytope a = fixtures::random_polytope(rng, n, rng.uniform(n + 1, 6), 3);
        const Polytope b = fixtures::random_polytope(rng, n, rng.uniform(n + 1, 6), 3);
        const Polytope s = minkowski_sum(a, b);
        check_invariants(s);
        for (int k = 0; k < 5; ++k) {
            RVector u(n);
            for (Index i = 0; i < n; ++i) {
                u(i) = q(rng.uniform(-4, 4), rng.uniform(1, 3));
            }
            CHECK(support_value(s, u) == support_value(a, u) + support_value(b, u));
        }
    }
    CHECK(code_of([] { minkowski_sum(fixtures::cube(2), fixtures::cube(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("affine images, scaling and canonical form")
{
    const Polytope t = fixtures::triangle();
    RMatrix m(2, 2);
    m << q(2), q(1), q(0), q(1);
    const Polytope img = affine_image(t, m, vec({q(1), q(-1)}));
    CHECK(same_body(img, hull_facets(columns({{1, -1}, {3, -1}, {2, 0}}))));
    CHECK(same_body(scaled(t, q(-1)), hull_facets(columns({{0, 0}, {-1, 0}, {0, -1}}))));
    CHECK(code_of([&] { affine_image(t, RMatrix::Identity(3, 3), vec({q(0), q(0), q(0)})); }) ==
          ErrorCode::DimensionMismatch);

    const Polytope c = canonical(img);
    for (Index j = 1; j < c.num_vertices(); ++j) {
        CHECK(lex_compare(c.vertex(j - 1), c.vertex(j)) < 0);
    }
    CHECK(vertex_barycenter(t) == vec({q(1, 3), q(1, 3)}));
}

TEST_CASE("JSON round trip keeps the listed vertex order")
{
    const Json j = Json::parse(R"({"dim": 2, "vertices": [["1", "0"], ["0", "1"], ["-1", "0"], [0, -1]]})");
    const Polytope p = polytope_from_json(j);
    CHECK(p.vertex(0) == vec({q(1), q(0)}));
    CHECK(p.vertex(3) == vec({q(0), q(-1)}));
    check_invariants(p);

    const Polytope back = polytope_from_json(Json::parse(polytope_to_json(p).dump()));
    CHECK(back.vertices() == p.vertices());
    CHECK(back.num_facets() == p.num_facets());

    CHECK(code_of([] { polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [["1", "0", "2"]]})")); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(code_of([] { polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [["x", "0"]]})")); }) ==
          ErrorCode::Parse);
    CHECK(code_of([] { polytope_from_json(Json::parse(R"({"dim": 2})")); }) == ErrorCode::Parse);
}

TEST_CASE("gift wrapping agrees with brute force face enumeration")
{
    fixtures::Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = rng.uniform(3, 4);
        const Index m = rng.uniform(n + 1, 14);
        RMatrix pts(n, m);
        for (Index i = 0; i < pts.size(); ++i) {
            pts(i) = q(rng.uniform(-2, 2));
        }
        if (affine_rank(pts) != n) {
            continue;
        }
        const Polytope p = hull_facets(pts);
        std::vector<Index> all(static_cast<std::size_t>(m));
        for (Index j = 0; j < m; ++j) {
            all[static_cast<std::size_t>(j)] = j;
        }
        // facets as sorted lists of vertex coordinates
        using Key = std::vector<std::vector<Rational>>;
        auto coords = [](const RVector& v) { return std::vector<Rational>(v.data(), v.data() + v.size()); };
        std::set<std::vector<Rational>> vertex_set;
        for (Index v = 0; v < p.num_vertices(); ++v) {
            vertex_set.insert(coords(p.vertex(v)));
        }
        std::set<Key> brute;
        for (const auto& face : maximal_faces(pts, all)) {
            std::set<std::vector<Rational>> k;
            for (Index j : face) {
                if (vertex_set.count(coords(pts.col(j)))) {
                    k.insert(coords(pts.col(j)));
                }
            }
            brute.insert(Key(k.begin(), k.end()));
        }
        std::set<Key> wrapped;
        for (const auto& f : p.facets()) {
            std::set<std::vector<Rational>> k;
            for (Index v : f.vertices) {
                k.insert(coords(p.vertex(v)));
            }
            wrapped.insert(Key(k.begin(), k.end()));
        }
        CHECK(brute == wrapped);
        check_invariants(p);
    }
}
