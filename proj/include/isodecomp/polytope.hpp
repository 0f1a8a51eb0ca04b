#ifndef ISODECOMP_POLYTOPE_HPP
#define ISODECOMP_POLYTOPE_HPP

#include <vector>

#include "isodecomp/exactnum.hpp"

namespace isodecomp {

/// Facet inequality <normal, x> <= offset together with the indices of the
/// vertices on the facet hyperplane (sorted ascending).
struct Facet
{
    RVector normal;
    Rational offset;
    std::vector<Index> vertices;
};

/// A full-dimensional polytope in R^n carried in both vertex and facet
/// form. Vertices are the columns of an n x m matrix.
///
/// Instances are produced by validate(), hull_facets() or by operations that
/// preserve validity, so every Polytope satisfies:
///  - the vertices affinely span R^n and are in convex position;
///  - every vertex satisfies every facet inequality, with equality exactly
///    on the listed incident vertices;
///  - each facet's vertices span a hyperplane;
///  - when the origin is interior every facet reads <a, x> <= 1, otherwise
///    the first nonzero coefficient of a is +-1.
class Polytope
{
public:
    Polytope() = default;

    Index dim() const { return vertices_.rows(); }
    Index num_vertices() const { return vertices_.cols(); }
    Index num_facets() const { return static_cast<Index>(facets_.size()); }

    const RMatrix& vertices() const { return vertices_; }
    RVector vertex(Index i) const { return vertices_.col(i); }
    const std::vector<Facet>& facets() const { return facets_; }
    const Facet& facet(Index i) const { return facets_[static_cast<std::size_t>(i)]; }

    /// All facet offsets strictly positive.
    bool origin_interior() const;

    /// A facet is a simplex when it has exactly n vertices.
    bool facet_is_simplex(Index f) const { return static_cast<Index>(facet(f).vertices.size()) == dim(); }
    bool is_simplicial() const;
    /// Every vertex lies on exactly n facets.
    bool is_simple() const;

    /// Indices of the facets incident to vertex v.
    std::vector<Index> facets_of_vertex(Index v) const;

    /// Builds a polytope from data the caller guarantees to be valid and
    /// already normalized. Used by operations whose output is valid by
    /// construction (polarity, affine images).
    static Polytope trusted(RMatrix vertices, std::vector<Facet> facets);

private:
    RMatrix vertices_;
    std::vector<Facet> facets_;
};

/// Verifies all Polytope invariants exactly (including that the facet list
/// is complete) and returns the normalized body. Vertex and facet order are
/// kept as given.
Polytope validate(const RMatrix& vertices, std::vector<Facet> facets);

/// Checks vertex/facet incidences and inequalities only, for data whose
/// combinatorics are known to be those of an already validated polytope.
Polytope validate_incidences(const RMatrix& vertices, std::vector<Facet> facets);

/// Convex hull of the columns of `points`. Interior and duplicate points are
/// dropped; the result is canonical().
Polytope hull_facets(const RMatrix& points);

/// Vertex sets of the maximal proper faces of conv(points[subset]).
///
/// Brute force over affinely independent subsets, exact throughout. For a
/// subset of affine dimension d the returned faces have dimension d - 1.
std::vector<std::vector<Index>> maximal_faces(const RMatrix& points, const std::vector<Index>& subset);

Polytope polar(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Gauge (Minkowski functional) ||x||_P.
Rational gauge_value(const Polytope& p, const RVector& x);

/// Support function h_P(u).
Rational support_value(const Polytope& p, const RVector& u);

/// Image {M x + c : x in P}.
Polytope affine_image(const Polytope& p, const RMatrix& m, const RVector& c);

/// Image r P for a nonzero rational r.
Polytope scaled(const Polytope& p, const Rational& r);

/// Vertices in lexicographic order, facets sorted by normal.
Polytope canonical(const Polytope& p);

/// Equality of canonical forms.
bool same_body(const Polytope& a, const Polytope& b);

/// Vertex average (an interior point).
RVector vertex_barycenter(const Polytope& p);

/// Outward facet inequality through the columns of `points` listed in
/// `subset`, oriented so that all points satisfy it. Empty when the subset
/// does not determine a supporting hyperplane.
std::optional<std::pair<RVector, Rational>> supporting_hyperplane(const RMatrix& points,
                                                                  const std::vector<Index>& subset);

/// Scales (a, b) per the Facet normalization rule.
void normalize_inequality(RVector& normal, Rational& offset, bool origin_interior);

} // namespace isodecomp

#endif // ISODECOMP_POLYTOPE_HPP
