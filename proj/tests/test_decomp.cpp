#include <doctest.h>

#include "fixtures.hpp"
#include "isodecomp/decomp.hpp"
#include "isodecomp/variations.hpp"

using namespace isodecomp;
using fixtures::columns;
using fixtures::q;

namespace {

// Triangular prism: three square side facets sharing edges.
Polytope prism()
{
    return hull_facets(columns({{1, 0, -1}, {0, 1, -1}, {-1, -1, -1}, {1, 0, 1}, {0, 1, 1}, {-1, -1, 1}}));
}

// Square pyramid, centered at the vertex barycenter.
Polytope pyramid()
{
    const Polytope p = hull_facets(columns({{-1, -1, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0}, {0, 0, 2}}));
    return affine_image(p, RMatrix::Identity(3, 3), RVector(-vertex_barycenter(p)));
}

} // namespace

TEST_CASE("dimension of decomposability on named bodies")
{
    CHECK(facewise_affine_space(fixtures::cross_polytope(3)).dimension() == 6);
    CHECK(facewise_affine_space(fixtures::cube(3)).dimension() == 4);
    CHECK(facewise_affine_space(fixtures::cube(4)).dimension() == 5);
    CHECK(facewise_affine_space(fixtures::hexagon()).dimension() == 6);
    CHECK(facewise_affine_space(fixtures::cube(2)).dimension() == 4);
    for (Index n = 2; n <= 4; ++n) {
        CHECK(facewise_affine_space(fixtures::standard_simplex(n)).dimension() == n + 1);
        CHECK(smilansky_dimension(fixtures::standard_simplex(n)) == n + 1);
    }
    CHECK(smilansky_dimension(fixtures::cross_polytope(3)) == 6);
    CHECK(smilansky_dimension(fixtures::cube(3)) == 4);
    CHECK(smilansky_dimension(fixtures::hexagon()) == 6);
    // prism: the square facets chain into one block, the two triangles stay free
    CHECK(facewise_affine_space(prism()).dimension() == smilansky_dimension(prism()));
    CHECK(facewise_affine_space(pyramid()).dimension() == smilansky_dimension(pyramid()));
}

TEST_CASE("facet dependence spaces")
{
    const Polytope c = fixtures::cube(3);
    for (Index f = 0; f < c.num_facets(); ++f) {
        const DependenceSpace d = dependence_space(c, f);
        CHECK(d.dimension() == 1);
        const RVector x = d.basis.col(0);
        RVector weighted = RVector::Zero(3);
        Rational total = 0;
        for (std::size_t k = 0; k < d.vertices.size(); ++k) {
            weighted += x(static_cast<Index>(k)) * c.vertex(d.vertices[k]);
            total += x(static_cast<Index>(k));
        }
        CHECK(weighted.isZero());
        CHECK(total == 0);
    }
    const Polytope o = fixtures::cross_polytope(3);
    for (Index f = 0; f < o.num_facets(); ++f) {
        CHECK(dependence_space(o, f).dimension() == 0);
    }
}

TEST_CASE("both routes agree on random polytopes")
{
    fixtures::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = rng.uniform(2, 4);
        // small grids produce many non-simplex facets
        const Polytope p = fixtures::random_polytope(rng, n, rng.uniform(n + 1, 12), rng.uniform(1, 2));
        const FacewiseAffineSpace s = facewise_affine_space(p);
        CHECK(s.dimension() == smilansky_dimension(p));
        CHECK(s.dimension() >= n + 1);
        CHECK(s.dimension() <= p.num_vertices());
        for (Index k = 0; k < s.dimension(); ++k) {
            CHECK(is_facewise_affine(p, s.basis.col(k)));
        }
        // restrictions of affine maps always belong to F(P)
        RVector g(p.num_vertices());
        for (Index v = 0; v < p.num_vertices(); ++v) {
            g(v) = p.vertex(v).sum() + 1;
        }
        CHECK(is_facewise_affine(p, g));
        CHECK(hypergraph_components(p).lower_bound <= s.dimension());
        if (p.is_simplicial()) {
            CHECK(s.dimension() == p.num_vertices());
        }
    }
}

TEST_CASE("perturbing a vertex of a non-simplex facet leaves F(P)")
{
    const Polytope c = fixtures::cube(3);
    RVector g = RVector::Ones(8);
    CHECK(is_facewise_affine(c, g));
    g(0) = 2;
    CHECK_FALSE(is_facewise_affine(c, g));
}

TEST_CASE("threshold")
{
    CHECK(decomposability_bound(2) == 5);
    CHECK(decomposability_bound(3) == 9);
    CHECK(decomposability_bound(4) == 14);
    const ThresholdCheck t = threshold_check(fixtures::triangle());
    CHECK(t.dim == 3);
    CHECK(t.bound == 5);
    CHECK_FALSE(t.exceeds);
    const ThresholdCheck h = threshold_check(fixtures::hexagon());
    CHECK(h.dim == 6);
    CHECK(h.exceeds);
}

TEST_CASE("hypergraph components")
{
    const ComponentReport c = hypergraph_components(fixtures::cube(3));
    CHECK(c.components.size() == 1);
    CHECK(c.dims == std::vector<Index>{3});
    CHECK(c.lower_bound == 4);

    const ComponentReport o = hypergraph_components(fixtures::cross_polytope(3));
    CHECK(o.components.size() == 6);
    CHECK(o.lower_bound == 6);

    // pyramid: the square base is one block, the apex is free
    const ComponentReport y = hypergraph_components(pyramid());
    CHECK(y.components.size() == 2);
    CHECK(y.lower_bound == 4);
    CHECK(facewise_affine_space(pyramid()).dimension() == 4);
}

TEST_CASE("summands reassemble twice the polar")
{
    fixtures::Rng rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        const Index n = rng.uniform(2, 3);
        const Polytope p = fixtures::random_polytope(rng, n, rng.uniform(n + 2, 9), 2);
        const RVector g = fixtures::random_speed(rng, p);
        const Rational eps = eps_bound(p, g) * q(rng.uniform(1, 4), 4);
        const auto [a, b] = summand_pair(p, g, eps);
        CHECK(same_body(minkowski_sum(a, b), scaled(polar(p), q(2))));
    }
}

TEST_CASE("symmetry data of cubes")
{
    for (Index n = 2; n <= 4; ++n) {
        const Polytope c = fixtures::cube(n);
        const SymmetryAnalysis a = symmetry_analysis(c, fixtures::minus_identity(n));
        CHECK(a.group.elements.size() == 2);
        CHECK(a.group.V_G_dim == n * (n + 1) / 2);
        CHECK(a.group.W_G_dim == 0);
        CHECK(a.bound == n * (n + 1) / 2);

        const SymmetryAnalysis r = symmetry_analysis(c, fixtures::coordinate_reflections(n));
        CHECK(r.group.elements.size() == (std::size_t{1} << n));
        CHECK(r.group.V_G_dim == n);
        CHECK(r.group.W_G_dim == 0);

        const SymmetryAnalysis s = symmetry_analysis(c, fixtures::signed_permutations(n));
        std::size_t order = std::size_t{1} << n;
        for (Index k = 2; k <= n; ++k) {
            order *= static_cast<std::size_t>(k);
        }
        CHECK(s.group.elements.size() == order);
        CHECK(s.group.V_G_dim == 1);
        CHECK(s.group.W_G_dim == 0);
        // only the constants are invariant facewise affine maps on the cube
        CHECK(s.F_G_dim == 1);
    }
}

TEST_CASE("invariant facewise affine maps")
{
    // symmetric cross-polytope: F(P) is all of R^6, invariants pair opposite vertices
    const SymmetryAnalysis a = symmetry_analysis(fixtures::cross_polytope(3), fixtures::minus_identity(3));
    CHECK(a.F_G_dim == 3);
    CHECK(a.group.V_G_dim == 6);
    CHECK(a.satisfies);
    CHECK(centralizer_dimension(fixtures::coordinate_reflections(3), 3) == 3);
    CHECK(fixed_space_dimension(fixtures::coordinate_reflections(3), 3) == 0);
    CHECK(fixed_space_dimension({RMatrix::Identity(3, 3)}, 3) == 3);
}

TEST_CASE("symmetry errors")
{
    const Polytope rect = hull_facets(columns({{-2, -1}, {2, -1}, {2, 1}, {-2, 1}}));
    RMatrix rot(2, 2);
    rot << q(0), q(-1), q(1), q(0);
    auto code = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Parse;
    };
    CHECK(code([&] { symmetry_group(rect, {rot}); }) == ErrorCode::NotASymmetry);
    RMatrix shear = RMatrix::Identity(2, 2);
    shear(0, 1) = 1;
    CHECK(code([&] { symmetry_group(rect, {shear}); }) == ErrorCode::NotASymmetry);
    CHECK(code([&] { symmetry_group(rect, {RMatrix(RMatrix::Identity(3, 3))}); }) == ErrorCode::DimensionMismatch);
    CHECK(code([] { symmetry_group(fixtures::cube(3), fixtures::signed_permutations(3), 10); }) ==
          ErrorCode::GroupTooLarge);
}
