#ifndef ISODECOMP_TESTS_FIXTURES_HPP
#define ISODECOMP_TESTS_FIXTURES_HPP

// Shared bodies, generators and a small seeded random source for the tests.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "isodecomp/decomp.hpp"
#include "isodecomp/exactnum.hpp"
#include "isodecomp/polytope.hpp"
#include "isodecomp/variations.hpp"

namespace fixtures {

using namespace isodecomp;

inline Rational q(long p, long d = 1) { return Rational(p, d); }

/// Columns from a list of integer points.
inline RMatrix columns(std::initializer_list<std::initializer_list<long>> pts)
{
    const auto n = static_cast<Index>(pts.begin()->size());
    RMatrix m(n, static_cast<Index>(pts.size()));
    Index j = 0;
    for (const auto& p : pts) {
        Index i = 0;
        for (long x : p) {
            m(i++, j) = Rational(x);
        }
        ++j;
    }
    return m;
}

inline RVector vec(std::initializer_list<Rational> xs)
{
    RVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (const auto& x : xs) {
        v(i++) = x;
    }
    return v;
}

/// [-1, 1]^n
inline Polytope cube(Index n)
{
    RMatrix pts(n, Index{1} << n);
    for (Index j = 0; j < pts.cols(); ++j) {
        for (Index i = 0; i < n; ++i) {
            pts(i, j) = ((j >> i) & 1) ? Rational(1) : Rational(-1);
        }
    }
    return hull_facets(pts);
}

inline Polytope cross_polytope(Index n)
{
    RMatrix pts = RMatrix::Zero(n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        pts(i, 2 * i) = 1;
        pts(i, 2 * i + 1) = -1;
    }
    return hull_facets(pts);
}

/// conv(0, e_1, ..., e_n)
inline Polytope standard_simplex(Index n)
{
    RMatrix pts = RMatrix::Zero(n, n + 1);
    for (Index i = 0; i < n; ++i) {
        pts(i, i + 1) = 1;
    }
    return hull_facets(pts);
}

/// Standard simplex moved so its centroid is the origin.
inline Polytope centered_simplex(Index n)
{
    const Polytope s = standard_simplex(n);
    return affine_image(s, RMatrix::Identity(n, n), RVector::Constant(n, Rational(-1, n + 1)));
}

/// Affine image of the regular hexagon.
inline Polytope hexagon()
{
    return hull_facets(columns({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}));
}

inline Polytope triangle() { return hull_facets(columns({{0, 0}, {1, 0}, {0, 1}})); }

inline std::vector<RMatrix> minus_identity(Index n) { return {RMatrix(-RMatrix::Identity(n, n))}; }

inline std::vector<RMatrix> coordinate_reflections(Index n)
{
    std::vector<RMatrix> gens;
    for (Index i = 0; i < n; ++i) {
        RMatrix m = RMatrix::Identity(n, n);
        m(i, i) = -1;
        gens.push_back(m);
    }
    return gens;
}

/// One reflection, a transposition and an n-cycle generate all signed
/// permutation matrices.
inline std::vector<RMatrix> signed_permutations(Index n)
{
    std::vector<RMatrix> gens;
    RMatrix r = RMatrix::Identity(n, n);
    r(0, 0) = -1;
    gens.push_back(r);
    RMatrix t = RMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        t(i, i < 2 ? 1 - i : i) = 1;
    }
    gens.push_back(t);
    RMatrix c = RMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        c(i, (i + 1) % n) = 1;
    }
    gens.push_back(c);
    return gens;
}

/// Seeded draws by modulo so the sequences do not depend on the standard
/// library's distribution implementations.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi)
    {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (engine_() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Hull of `count` random integer points in [-range, range]^n, translated so
/// the vertex barycenter is the origin (hence interior).
inline Polytope random_polytope(Rng& rng, Index n, Index count, long range)
{
    while (true) {
        RMatrix pts(n, count);
        for (Index j = 0; j < count; ++j) {
            for (Index i = 0; i < n; ++i) {
                pts(i, j) = Rational(rng.uniform(-range, range));
            }
        }
        try {
            const Polytope p = hull_facets(pts);
            return affine_image(p, RMatrix::Identity(n, n), RVector(-vertex_barycenter(p)));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotFullDimensional) {
                throw;
            }
        }
    }
}

/// Random nonzero element of F(P) with small integer coefficients on the
/// canonical basis.
inline RVector random_speed(Rng& rng, const Polytope& p)
{
    const RMatrix basis = facewise_affine_space(p).basis;
    while (true) {
        RVector g = RVector::Zero(p.num_vertices());
        for (Index k = 0; k < basis.cols(); ++k) {
            g += Rational(rng.uniform(-3, 3)) * basis.col(k);
        }
        if (!g.isZero()) {
            return g;
        }
    }
}

/// Rescales g until the radial family admits steps up to `reach`.
inline RVector tame(const Polytope& p, RVector g, const Rational& reach)
{
    while (eps_bound(p, g) < reach) {
        g *= Rational(1, 2);
    }
    return g;
}

/// A shadow system that moves one vertex parallel to the facet it was
/// erected over: P is simplicial, the apex v lies beyond exactly one facet F
/// of P, and v travels along u with <a_F, u> = 0 while every other vertex
/// stays put. On the sampled grid t = k step, |k| <= 4, the apex stays
/// beyond F alone, so the combinatorics never change.
struct Hinge
{
    ShadowSystem system;
    Rational step;
};

inline Hinge hinge_movement(Rng& rng, Index n)
{
    while (true) {
        const Polytope p = random_polytope(rng, n, rng.uniform(n + 2, n + 5), 3);
        if (!p.is_simplicial()) {
            continue;
        }
        const Index f = rng.uniform(0, p.num_facets() - 1);
        const Facet& facet = p.facet(f);
        RVector c = RVector::Zero(n);
        for (Index v : facet.vertices) {
            c += p.vertex(v);
        }
        c /= Rational(static_cast<long>(facet.vertices.size()));
        const RVector& a = facet.normal;
        auto beyond_only_f = [&](const RVector& x) {
            if (a.dot(x) <= facet.offset) {
                return false;
            }
            for (Index g = 0; g < p.num_facets(); ++g) {
                if (g != f && p.facet(g).normal.dot(x) >= p.facet(g).offset) {
                    return false;
                }
            }
            return true;
        };
        Rational delta = 1;
        while (!beyond_only_f(c + delta * a)) {
            delta /= 2;
        }
        const RVector apex = c + delta * a;

        RMatrix pts(n, p.num_vertices() + 1);
        pts.leftCols(p.num_vertices()) = p.vertices();
        pts.col(p.num_vertices()) = apex;
        const Polytope q = hull_facets(pts);
        if (!q.is_simplicial() || q.num_vertices() != p.num_vertices() + 1) {
            continue;
        }
        RVector w(n);
        for (Index i = 0; i < n; ++i) {
            w(i) = Rational(rng.uniform(-3, 3));
        }
        const RVector u = w - (a.dot(w) / a.dot(a)) * a;
        if (u.isZero()) {
            continue;
        }
        RVector beta = RVector::Zero(q.num_vertices());
        for (Index v = 0; v < q.num_vertices(); ++v) {
            if (q.vertex(v) == apex) {
                beta(v) = 1;
            }
        }
        Rational step(1, 8);
        auto grid_ok = [&] {
            for (long k = -4; k <= 4; ++k) {
                if (!beyond_only_f(apex + Rational(k) * step * u)) {
                    return false;
                }
            }
            return true;
        };
        while (!grid_ok()) {
            step /= 2;
        }
        return {ShadowSystem{q, u, beta, -4 * step, 4 * step}, step};
    }
}

} // namespace fixtures

#endif // ISODECOMP_TESTS_FIXTURES_HPP
