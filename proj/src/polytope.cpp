#include "isodecomp/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace isodecomp {

namespace {

bool contains_sorted(const std::vector<Index>& sorted, Index value)
{
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

bool is_subset(const std::vector<Index>& small, const std::vector<Index>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

RMatrix select_columns(const RMatrix& points, const std::vector<Index>& subset)
{
    RMatrix out(points.rows(), static_cast<Index>(subset.size()));
    for (std::size_t j = 0; j < subset.size(); ++j) {
        out.col(static_cast<Index>(j)) = points.col(subset[j]);
    }
    return out;
}

// Calls visit(combination) for every k-subset of {0, ..., m-1} in
// lexicographic order.
template <typename Visit>
void for_each_combination(Index m, Index k, Visit&& visit)
{
    if (k > m || k <= 0) {
        return;
    }
    std::vector<Index> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), Index{0});
    while (true) {
        visit(c);
        Index i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++c[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < k; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

struct FaceCandidate
{
    std::vector<Index> members;
    RVector direction;
};

// Maximal proper faces of conv(points[subset]) together with an outward
// direction inside the affine hull of the subset.
std::vector<FaceCandidate> enumerate_faces(const RMatrix& points, const std::vector<Index>& subset)
{
    std::vector<FaceCandidate> faces;
    const Index n = points.rows();
    const Index size = static_cast<Index>(subset.size());
    if (size <= 1) {
        return faces;
    }
    const RMatrix local = select_columns(points, subset);
    RMatrix directions(size - 1, n);
    for (Index j = 1; j < size; ++j) {
        directions.row(j - 1) = (local.col(j) - local.col(0)).transpose();
    }
    const auto red = rref(directions);
    const Index d = red.rank;
    if (d == 0) {
        return faces;
    }
    // normals of the affine hull of the subset
    const RMatrix complement = kernel_basis(directions);

    RMatrix system(n - 1, n);
    for (Index i = 0; i < complement.cols(); ++i) {
        system.row(d - 1 + i) = complement.col(i).transpose();
    }
    for_each_combination(size, d, [&](const std::vector<Index>& pick) {
        for (const auto& face : faces) {
            bool inside = true;
            for (Index p : pick) {
                if (!contains_sorted(face.members, subset[static_cast<std::size_t>(p)])) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                return;
            }
        }
        const RVector base = local.col(pick[0]);
        for (Index i = 1; i < d; ++i) {
            system.row(i - 1) = (local.col(pick[static_cast<std::size_t>(i)]) - base).transpose();
        }
        const RMatrix normal_space = kernel_basis(system);
        if (normal_space.cols() != 1) {
            return;
        }
        RVector c = normal_space.col(0);
        int seen = 0;
        std::vector<Index> on_plane;
        for (Index j = 0; j < size; ++j) {
            const int s = sign(c.dot(local.col(j) - base));
            if (s == 0) {
                on_plane.push_back(subset[static_cast<std::size_t>(j)]);
            } else if (seen == 0) {
                seen = s;
            } else if (s != seen) {
                return;
            }
        }
        if (seen > 0) {
            c = -c;
        }
        std::sort(on_plane.begin(), on_plane.end());
        for (const auto& face : faces) {
            if (face.members == on_plane) {
                return;
            }
        }
        faces.push_back({std::move(on_plane), std::move(c)});
    });
    return faces;
}

// Facets of conv(pts) by gift wrapping: tilt a supporting hyperplane until
// it carries a facet, then pivot around every ridge to the neighbouring
// facet. Members are all points on the facet hyperplane. Needs n >= 2 and
// full-dimensional pts.
std::vector<FaceCandidate> wrap_facets(const RMatrix& pts)
{
    const Index n = pts.rows();
    const Index m = pts.cols();
    auto on_plane = [&](const RVector& a, const Rational& b) {
        std::vector<Index> s;
        for (Index j = 0; j < m; ++j) {
            if (a.dot(pts.col(j)) == b) {
                s.push_back(j);
            }
        }
        return s;
    };
    // direction orthogonal to `a` and to aff(points[face])
    auto pivot_direction = [&](const RVector& a, const std::vector<Index>& face) {
        RMatrix sys(static_cast<Index>(face.size()), n);
        sys.row(0) = a.transpose();
        for (std::size_t j = 1; j < face.size(); ++j) {
            sys.row(static_cast<Index>(j)) = (pts.col(face[j]) - pts.col(face[0])).transpose();
        }
        return RVector(kernel_basis(sys).col(0));
    };
    // smallest lambda > 0 at which <a + lambda d, x> = b + lambda <d, base>
    // touches another point; d must point to where such points exist
    auto tilt = [&](RVector& a, Rational& b, const RVector& d, const RVector& base) {
        std::optional<Rational> best;
        for (Index j = 0; j < m; ++j) {
            const Rational t = d.dot(pts.col(j) - base);
            if (sign(t) > 0) {
                const Rational lambda = (b - a.dot(pts.col(j))) / t;
                if (!best || lambda < *best) {
                    best = lambda;
                }
            }
        }
        a += *best * d;
        b += *best * d.dot(base);
    };

    // pts are sorted, so column 0 attains the minimal first coordinate
    RVector a = RVector::Zero(n);
    a(0) = -1;
    Rational b = -pts(0, 0);
    std::vector<Index> face = on_plane(a, b);
    while (affine_rank(select_columns(pts, face)) < n - 1) {
        RVector d = pivot_direction(a, face);
        const RVector base = pts.col(face[0]);
        bool ahead = false;
        for (Index j = 0; j < m && !ahead; ++j) {
            ahead = sign(d.dot(pts.col(j) - base)) > 0;
        }
        if (!ahead) {
            d = -d;
        }
        tilt(a, b, d, base);
        face = on_plane(a, b);
    }

    std::vector<FaceCandidate> facets{{face, a}};
    std::vector<Rational> offsets{b};
    std::set<std::vector<Index>> known{face};
    std::set<std::vector<Index>> ridges_done;
    for (std::size_t k = 0; k < facets.size(); ++k) {
        const std::vector<Index> members = facets[k].members;
        const RVector normal = facets[k].direction;
        const Rational offset = offsets[k];
        for (auto& ridge : enumerate_faces(pts, members)) {
            if (!ridges_done.insert(ridge.members).second) {
                continue;
            }
            RVector d = pivot_direction(normal, ridge.members);
            const RVector base = pts.col(ridge.members.front());
            for (Index v : members) {
                if (!contains_sorted(ridge.members, v)) {
                    if (sign(d.dot(pts.col(v) - base)) > 0) {
                        d = -d;
                    }
                    break;
                }
            }
            // Each point q below the facet spans, with the ridge, the plane
            // with normal alpha a + beta d, (alpha, beta) = (<d, q - base>,
            // b - <a, q>), beta > 0. The neighbour is the one reached first
            // when turning a towards d.
            Rational alpha, beta;
            bool found = false;
            for (Index j = 0; j < m; ++j) {
                const Rational bj = offset - normal.dot(pts.col(j));
                if (sign(bj) <= 0) {
                    continue;
                }
                const Rational aj = d.dot(pts.col(j) - base);
                if (!found || sign(aj * beta - bj * alpha) > 0) {
                    alpha = aj;
                    beta = bj;
                    found = true;
                }
            }
            RVector a2 = alpha * normal + beta * d;
            Rational b2 = a2.dot(base);
            std::vector<Index> next = on_plane(a2, b2);
            if (known.insert(next).second) {
                facets.push_back({std::move(next), std::move(a2)});
                offsets.push_back(std::move(b2));
            }
        }
    }
    return facets;
}

bool vertex_rank_ok(const RMatrix& vertices, const std::vector<Facet>& facets, Index v)
{
    const Index n = vertices.rows();
    RMatrix tight(0, n);
    for (const auto& f : facets) {
        if (contains_sorted(f.vertices, v)) {
            tight.conservativeResize(tight.rows() + 1, n);
            tight.row(tight.rows() - 1) = f.normal.transpose();
        }
    }
    return tight.rows() >= n && rank(tight) == n;
}

void check_shape(const RMatrix& vertices)
{
    const Index n = vertices.rows();
    if (n < 1) {
        throw Error(ErrorCode::NotFullDimensional, "dimension must be at least 1");
    }
    if (vertices.cols() < n + 1) {
        throw Error(ErrorCode::NotFullDimensional, "need at least n+1 vertices");
    }
    if (affine_rank(vertices) != n) {
        throw Error(ErrorCode::NotFullDimensional, "vertices do not affinely span R^" + std::to_string(n));
    }
}

// Incidence and inequality checks shared by both validation levels.
std::vector<Facet> check_facets(const RMatrix& vertices, std::vector<Facet> facets)
{
    const Index n = vertices.rows();
    const Index m = vertices.cols();
    for (Index i = 0; i < m; ++i) {
        for (Index j = i + 1; j < m; ++j) {
            if (vertices.col(i) == vertices.col(j)) {
                throw Error(ErrorCode::NotConvexPosition, "duplicate vertex " + std::to_string(i));
            }
        }
    }
    for (std::size_t k = 0; k < facets.size(); ++k) {
        Facet& f = facets[k];
        const std::string name = "facet " + std::to_string(k);
        if (f.normal.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, name + " has a normal of the wrong length");
        }
        if (f.normal.isZero()) {
            throw Error(ErrorCode::IncidenceMismatch, name + " has a zero normal");
        }
        std::sort(f.vertices.begin(), f.vertices.end());
        f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
        for (Index v : f.vertices) {
            if (v < 0 || v >= m) {
                throw Error(ErrorCode::IncidenceMismatch, name + " lists vertex index out of range");
            }
        }
        for (Index v = 0; v < m; ++v) {
            const int s = sign(f.normal.dot(vertices.col(v)) - f.offset);
            if (s > 0) {
                throw Error(ErrorCode::NotConvexPosition,
                            "vertex " + std::to_string(v) + " violates " + name);
            }
        }
        for (Index v = 0; v < m; ++v) {
            const bool on_plane = is_zero(f.normal.dot(vertices.col(v)) - f.offset);
            const bool listed = contains_sorted(f.vertices, v);
            if (on_plane != listed) {
                throw Error(ErrorCode::IncidenceMismatch,
                            "vertex " + std::to_string(v) + (listed ? " is listed on " : " lies unlisted on ") + name);
            }
        }
        if (affine_rank(select_columns(vertices, f.vertices)) != n - 1) {
            throw Error(ErrorCode::IncidenceMismatch, name + " vertices do not span a hyperplane");
        }
    }
    for (std::size_t a = 0; a < facets.size(); ++a) {
        for (std::size_t b = a + 1; b < facets.size(); ++b) {
            if (facets[a].vertices == facets[b].vertices) {
                throw Error(ErrorCode::IncidenceMismatch, "facets " + std::to_string(a) + " and " +
                                                              std::to_string(b) + " coincide");
            }
        }
    }
    bool interior = std::all_of(facets.begin(), facets.end(), [](const Facet& f) { return sign(f.offset) > 0; });
    for (auto& f : facets) {
        normalize_inequality(f.normal, f.offset, interior);
    }
    return facets;
}

// Run after the facet list is known to be complete: a point on fewer than n
// independent facets is then not a vertex.
void check_vertex_ranks(const RMatrix& vertices, const std::vector<Facet>& facets)
{
    for (Index v = 0; v < vertices.cols(); ++v) {
        if (!vertex_rank_ok(vertices, facets, v)) {
            throw Error(ErrorCode::NotConvexPosition, "point " + std::to_string(v) + " is not a vertex");
        }
    }
}

// Each ridge of each facet must lie in exactly one other facet; together with
// the incidence checks this makes the facet list the whole boundary.
void check_closed_boundary(const RMatrix& vertices, const std::vector<Facet>& facets)
{
    const Index n = vertices.rows();
    if (n == 1) {
        if (facets.size() != 2) {
            throw Error(ErrorCode::IncidenceMismatch, "a segment has exactly two facets");
        }
        return;
    }
    for (std::size_t k = 0; k < facets.size(); ++k) {
        for (const auto& ridge : enumerate_faces(vertices, facets[k].vertices)) {
            int count = 0;
            for (std::size_t j = 0; j < facets.size(); ++j) {
                if (j != k && is_subset(ridge.members, facets[j].vertices)) {
                    ++count;
                }
            }
            if (count != 1) {
                throw Error(ErrorCode::IncidenceMismatch,
                            "facet list is incomplete around a ridge of facet " + std::to_string(k));
            }
        }
    }
}

Polytope hull_2d(const RMatrix& pts)
{
    // pts: distinct points sorted lexicographically
    const Index m = pts.cols();
    auto cross = [&](Index o, Index a, Index b) {
        return (pts(0, a) - pts(0, o)) * (pts(1, b) - pts(1, o)) - (pts(1, a) - pts(1, o)) * (pts(0, b) - pts(0, o));
    };
    std::vector<Index> hull(static_cast<std::size_t>(2 * m));
    std::size_t k = 0;
    for (Index i = 0; i < m; ++i) {
        while (k >= 2 && sign(cross(hull[k - 2], hull[k - 1], i)) <= 0) {
            --k;
        }
        hull[k++] = i;
    }
    for (Index i = m - 2, lower = static_cast<Index>(k) + 1; i >= 0; --i) {
        while (static_cast<Index>(k) >= lower && sign(cross(hull[k - 2], hull[k - 1], i)) <= 0) {
            --k;
        }
        hull[k++] = i;
    }
    hull.resize(k - 1);
    std::vector<Index> order = hull;
    std::sort(order.begin(), order.end());
    RMatrix verts(2, static_cast<Index>(order.size()));
    std::vector<Index> position(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        verts.col(static_cast<Index>(i)) = pts.col(order[i]);
        position[static_cast<std::size_t>(order[i])] = static_cast<Index>(i);
    }
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Index a = hull[i];
        const Index b = hull[(i + 1) % hull.size()];
        Facet f;
        f.normal = RVector(2);
        f.normal << pts(1, b) - pts(1, a), pts(0, a) - pts(0, b);
        f.offset = f.normal.dot(pts.col(a));
        f.vertices = {position[static_cast<std::size_t>(a)], position[static_cast<std::size_t>(b)]};
        std::sort(f.vertices.begin(), f.vertices.end());
        facets.push_back(std::move(f));
    }
    const bool interior = std::all_of(facets.begin(), facets.end(), [](const Facet& f) { return sign(f.offset) > 0; });
    for (auto& f : facets) {
        normalize_inequality(f.normal, f.offset, interior);
    }
    return canonical(Polytope::trusted(std::move(verts), std::move(facets)));
}

} // namespace

bool Polytope::origin_interior() const
{
    return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return sign(f.offset) > 0; });
}

bool Polytope::is_simplicial() const
{
    for (Index f = 0; f < num_facets(); ++f) {
        if (!facet_is_simplex(f)) {
            return false;
        }
    }
    return true;
}

bool Polytope::is_simple() const
{
    for (Index v = 0; v < num_vertices(); ++v) {
        if (static_cast<Index>(facets_of_vertex(v).size()) != dim()) {
            return false;
        }
    }
    return true;
}

std::vector<Index> Polytope::facets_of_vertex(Index v) const
{
    std::vector<Index> out;
    for (Index f = 0; f < num_facets(); ++f) {
        if (contains_sorted(facet(f).vertices, v)) {
            out.push_back(f);
        }
    }
    return out;
}

Polytope Polytope::trusted(RMatrix vertices, std::vector<Facet> facets)
{
    Polytope p;
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);
    return p;
}

void normalize_inequality(RVector& normal, Rational& offset, bool origin_interior)
{
    Rational scale;
    if (origin_interior && sign(offset) > 0) {
        scale = offset;
    } else {
        Index i = 0;
        while (i < normal.size() && is_zero(normal(i))) {
            ++i;
        }
        scale = abs(normal(i));
    }
    normal /= scale;
    offset /= scale;
}

Polytope validate(const RMatrix& vertices, std::vector<Facet> facets)
{
    check_shape(vertices);
    facets = check_facets(vertices, std::move(facets));
    check_closed_boundary(vertices, facets);
    check_vertex_ranks(vertices, facets);
    return Polytope::trusted(vertices, std::move(facets));
}

Polytope validate_incidences(const RMatrix& vertices, std::vector<Facet> facets)
{
    check_shape(vertices);
    facets = check_facets(vertices, std::move(facets));
    check_vertex_ranks(vertices, facets);
    return Polytope::trusted(vertices, std::move(facets));
}

std::vector<std::vector<Index>> maximal_faces(const RMatrix& points, const std::vector<Index>& subset)
{
    std::vector<Index> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<Index>> out;
    for (auto& face : enumerate_faces(points, sorted)) {
        out.push_back(std::move(face.members));
    }
    return out;
}

std::optional<std::pair<RVector, Rational>> supporting_hyperplane(const RMatrix& points,
                                                                  const std::vector<Index>& subset)
{
    const Index n = points.rows();
    if (subset.empty()) {
        return std::nullopt;
    }
    RMatrix system(static_cast<Index>(subset.size()) - 1, n);
    const RVector base = points.col(subset[0]);
    for (std::size_t i = 1; i < subset.size(); ++i) {
        system.row(static_cast<Index>(i) - 1) = (points.col(subset[i]) - base).transpose();
    }
    const RMatrix normals = kernel_basis(system);
    if (normals.cols() != 1) {
        return std::nullopt;
    }
    RVector c = normals.col(0);
    int seen = 0;
    for (Index j = 0; j < points.cols(); ++j) {
        const int s = sign(c.dot(points.col(j) - base));
        if (s != 0 && seen != 0 && s != seen) {
            return std::nullopt;
        }
        if (s != 0) {
            seen = s;
        }
    }
    if (seen > 0) {
        c = -c;
    }
    Rational b = c.dot(base);
    return std::make_pair(std::move(c), std::move(b));
}

Polytope hull_facets(const RMatrix& points)
{
    const Index n = points.rows();
    std::vector<Index> order(static_cast<std::size_t>(points.cols()));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return lex_compare(points.col(a), points.col(b)) < 0; });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](Index a, Index b) { return points.col(a) == points.col(b); }),
                order.end());
    const RMatrix pts = select_columns(points, order);
    if (n < 1 || pts.cols() < n + 1 || affine_rank(pts) != n) {
        throw Error(ErrorCode::NotFullDimensional, "points do not affinely span R^" + std::to_string(n));
    }
    if (n == 2) {
        return hull_2d(pts);
    }

    std::vector<Facet> raw;
    if (n == 1) {
        Facet lo{RVector::Constant(1, Rational(-1)), -pts(0, 0), {0}};
        Facet hi{RVector::Constant(1, Rational(1)), pts(0, pts.cols() - 1), {pts.cols() - 1}};
        raw = {lo, hi};
    } else {
        for (auto& face : wrap_facets(pts)) {
            Facet f;
            f.normal = face.direction;
            f.offset = f.normal.dot(pts.col(face.members.front()));
            f.vertices = std::move(face.members);
            raw.push_back(std::move(f));
        }
    }

    // Boundary points that are not vertices sit on fewer than n independent facets.
    std::vector<Index> keep;
    for (Index v = 0; v < pts.cols(); ++v) {
        bool on_boundary = false;
        for (const auto& f : raw) {
            on_boundary = on_boundary || contains_sorted(f.vertices, v);
        }
        if (on_boundary && vertex_rank_ok(pts, raw, v)) {
            keep.push_back(v);
        }
    }
    std::vector<Index> position(static_cast<std::size_t>(pts.cols()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        position[static_cast<std::size_t>(keep[i])] = static_cast<Index>(i);
    }
    for (auto& f : raw) {
        std::vector<Index> mapped;
        for (Index v : f.vertices) {
            if (position[static_cast<std::size_t>(v)] >= 0) {
                mapped.push_back(position[static_cast<std::size_t>(v)]);
            }
        }
        f.vertices = std::move(mapped);
    }
    const bool interior = std::all_of(raw.begin(), raw.end(), [](const Facet& f) { return sign(f.offset) > 0; });
    for (auto& f : raw) {
        normalize_inequality(f.normal, f.offset, interior);
    }
    return canonical(Polytope::trusted(select_columns(pts, keep), std::move(raw)));
}

Polytope polar(const Polytope& p)
{
    if (!p.origin_interior()) {
        throw Error(ErrorCode::OriginNotInterior, "polar body needs the origin in the interior");
    }
    const Index n = p.dim();
    RMatrix verts(n, p.num_facets());
    for (Index f = 0; f < p.num_facets(); ++f) {
        verts.col(f) = p.facet(f).normal / p.facet(f).offset;
    }
    std::vector<Facet> facets;
    facets.reserve(static_cast<std::size_t>(p.num_vertices()));
    for (Index v = 0; v < p.num_vertices(); ++v) {
        facets.push_back({p.vertex(v), Rational(1), p.facets_of_vertex(v)});
    }
    return Polytope::trusted(std::move(verts), std::move(facets));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    if (p.dim() != q.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of bodies in different dimensions");
    }
    RMatrix sums(p.dim(), p.num_vertices() * q.num_vertices());
    Index k = 0;
    for (Index i = 0; i < p.num_vertices(); ++i) {
        for (Index j = 0; j < q.num_vertices(); ++j) {
            sums.col(k++) = p.vertex(i) + q.vertex(j);
        }
    }
    return hull_facets(sums);
}

Rational gauge_value(const Polytope& p, const RVector& x)
{
    if (!p.origin_interior()) {
        throw Error(ErrorCode::OriginNotInterior, "gauge function needs the origin in the interior");
    }
    Rational best(0);
    for (const auto& f : p.facets()) {
        Rational value = f.normal.dot(x) / f.offset;
        if (value > best) {
            best = value;
        }
    }
    return best;
}

Rational support_value(const Polytope& p, const RVector& u)
{
    Rational best = p.vertex(0).dot(u);
    for (Index v = 1; v < p.num_vertices(); ++v) {
        Rational value = p.vertex(v).dot(u);
        if (value > best) {
            best = value;
        }
    }
    return best;
}

Polytope affine_image(const Polytope& p, const RMatrix& m, const RVector& c)
{
    if (m.rows() != p.dim() || m.cols() != p.dim() || c.size() != p.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "affine map does not match the polytope dimension");
    }
    const RMatrix inv_t = inverse(m).transpose();
    RMatrix verts = m * p.vertices();
    verts.colwise() += c;
    std::vector<Facet> facets;
    facets.reserve(p.facets().size());
    for (const auto& f : p.facets()) {
        RVector normal = inv_t * f.normal;
        Rational offset = f.offset + normal.dot(c);
        facets.push_back({std::move(normal), std::move(offset), f.vertices});
    }
    const bool interior = std::all_of(facets.begin(), facets.end(), [](const Facet& f) { return sign(f.offset) > 0; });
    for (auto& f : facets) {
        normalize_inequality(f.normal, f.offset, interior);
    }
    return Polytope::trusted(std::move(verts), std::move(facets));
}

Polytope scaled(const Polytope& p, const Rational& r)
{
    return affine_image(p, RMatrix::Identity(p.dim(), p.dim()) * r, RVector::Zero(p.dim()));
}

Polytope canonical(const Polytope& p)
{
    std::vector<Index> order(static_cast<std::size_t>(p.num_vertices()));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return lex_compare(p.vertex(a), p.vertex(b)) < 0; });
    std::vector<Index> position(order.size());
    RMatrix verts(p.dim(), p.num_vertices());
    for (std::size_t i = 0; i < order.size(); ++i) {
        verts.col(static_cast<Index>(i)) = p.vertex(order[i]);
        position[static_cast<std::size_t>(order[i])] = static_cast<Index>(i);
    }
    std::vector<Facet> facets;
    for (const auto& f : p.facets()) {
        Facet g{f.normal, f.offset, {}};
        for (Index v : f.vertices) {
            g.vertices.push_back(position[static_cast<std::size_t>(v)]);
        }
        std::sort(g.vertices.begin(), g.vertices.end());
        facets.push_back(std::move(g));
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        const int c = lex_compare(a.normal, b.normal);
        return c != 0 ? c < 0 : a.offset < b.offset;
    });
    return Polytope::trusted(std::move(verts), std::move(facets));
}

bool same_body(const Polytope& a, const Polytope& b)
{
    if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) {
        return false;
    }
    const Polytope ca = canonical(a);
    const Polytope cb = canonical(b);
    if (ca.vertices() != cb.vertices()) {
        return false;
    }
    for (Index f = 0; f < ca.num_facets(); ++f) {
        const auto& fa = ca.facet(f);
        const auto& fb = cb.facet(f);
        if (fa.normal != fb.normal || fa.offset != fb.offset || fa.vertices != fb.vertices) {
            return false;
        }
    }
    return true;
}

RVector vertex_barycenter(const Polytope& p)
{
    RVector c = p.vertices().rowwise().sum();
    return c / Rational(p.num_vertices());
}

} // namespace isodecomp
