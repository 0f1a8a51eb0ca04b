#include "isodecomp/variations.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace isodecomp {

namespace {

void require_origin_interior(const Polytope& p)
{
    if (!p.origin_interior()) {
        throw Error(ErrorCode::OriginNotInterior, "radial families need the origin in the interior");
    }
}

void require_speed_size(const Polytope& p, const RVector& g)
{
    if (g.size() != p.num_vertices()) {
        throw Error(ErrorCode::DimensionMismatch, "speed vector has " + std::to_string(g.size()) +
                                                      " entries for " + std::to_string(p.num_vertices()) +
                                                      " vertices");
    }
}

std::vector<RVector> facet_speeds(const Polytope& p, const RVector& g)
{
    std::vector<RVector> out;
    out.reserve(static_cast<std::size_t>(p.num_facets()));
    for (Index f = 0; f < p.num_facets(); ++f) {
        out.push_back(facet_speed(p, f, g));
    }
    return out;
}

Polynomial coordinate(int n, Index i)
{
    return Polynomial::variable(n, static_cast<int>(i));
}

Rational max_abs(const RMatrix& m)
{
    Rational best(0);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (abs(m(i, j)) > best) {
                best = abs(m(i, j));
            }
        }
    }
    return best;
}

Rational lk_from_moments(const MomentData& m)
{
    const RVector c = m.first / m.volume;
    const RMatrix cov = m.second / m.volume - c * c.transpose();
    return determinant(cov) / (m.volume * m.volume);
}

// Central differences with Richardson extrapolation; f holds the values at
// t = -2h, -h, 0, h, 2h.
Rational richardson_first(const std::array<Rational, 5>& f, const Rational& h)
{
    const Rational d1 = (f[3] - f[1]) / (2 * h);
    const Rational d2 = (f[4] - f[0]) / (4 * h);
    return (4 * d1 - d2) / 3;
}

Rational richardson_second(const std::array<Rational, 5>& f, const Rational& h)
{
    const Rational s1 = (f[3] - 2 * f[2] + f[1]) / (h * h);
    const Rational s2 = (f[4] - 2 * f[2] + f[0]) / (4 * h * h);
    return (4 * s1 - s2) / 3;
}

std::array<MomentData, 5> sample_moments(const Polytope& p, const RVector& g, const Rational& h)
{
    if (sign(h) <= 0) {
        throw Error(ErrorCode::StepTooLarge, "finite difference step must be positive");
    }
    if (2 * h > eps_bound(p, g)) {
        throw Error(ErrorCode::StepTooLarge, "2h = " + to_string(Rational(2 * h)) + " exceeds the validity radius " +
                                                 to_string(eps_bound(p, g)));
    }
    std::array<MomentData, 5> out;
    for (int k = -2; k <= 2; ++k) {
        out[static_cast<std::size_t>(k + 2)] = body_moments(k == 0 ? p : radial_polytope(p, g, h * k));
    }
    return out;
}

} // namespace

RVector facet_speed(const Polytope& p, Index f, const RVector& g)
{
    require_origin_interior(p);
    require_speed_size(p, g);
    const Facet& facet = p.facet(f);
    const Index n = p.dim();
    const Index k = static_cast<Index>(facet.vertices.size());
    RMatrix augmented(k, n + 1);
    for (Index r = 0; r < k; ++r) {
        const Index v = facet.vertices[static_cast<std::size_t>(r)];
        augmented.block(r, 0, 1, n) = p.vertex(v).transpose();
        augmented(r, n) = g(v);
    }
    const auto red = rref(augmented);
    if (red.rank != n || red.pivots.back() == n) {
        throw Error(ErrorCode::NotFacewiseAffine, "speed is not affine on facet " + std::to_string(f));
    }
    return red.reduced.block(0, n, n, 1);
}

Rational eps_bound(const Polytope& p, const RVector& g)
{
    require_origin_interior(p);
    require_speed_size(p, g);
    Rational eps(1);
    if (g.isZero()) {
        return eps;
    }
    const auto speeds = facet_speeds(p, g);
    std::optional<Rational> breakpoint;
    for (Index f = 0; f < p.num_facets(); ++f) {
        const Facet& facet = p.facet(f);
        for (Index u = 0; u < p.num_vertices(); ++u) {
            if (std::binary_search(facet.vertices.begin(), facet.vertices.end(), u)) {
                continue;
            }
            // moved vertex stays strictly inside the moved facet iff c0 + t c1 > 0
            const Rational c0 = Rational(1) - facet.normal.dot(p.vertex(u));
            const Rational c1 = g(u) - speeds[static_cast<std::size_t>(f)].dot(p.vertex(u));
            if (!is_zero(c1)) {
                const Rational t = c0 / abs(c1);
                if (!breakpoint || t < *breakpoint) {
                    breakpoint = t;
                }
            }
        }
    }
    if (breakpoint && *breakpoint / 2 < eps) {
        eps = *breakpoint / 2;
    }
    for (Index v = 0; v < g.size(); ++v) {
        if (!is_zero(g(v))) {
            const Rational cap = Rational(1) / (2 * abs(g(v)));
            if (cap < eps) {
                eps = cap;
            }
        }
    }
    return eps;
}

Polytope radial_polytope(const Polytope& p, const RVector& g, const Rational& t)
{
    require_origin_interior(p);
    require_speed_size(p, g);
    const auto speeds = facet_speeds(p, g);
    if (is_zero(t)) {
        return p;
    }
    RMatrix verts(p.dim(), p.num_vertices());
    for (Index v = 0; v < p.num_vertices(); ++v) {
        const Rational scale = 1 + t * g(v);
        if (sign(scale) <= 0) {
            throw Error(ErrorCode::EpsilonTooLarge, "vertex " + std::to_string(v) + " passes through the origin");
        }
        verts.col(v) = p.vertex(v) / scale;
    }
    std::vector<Facet> facets;
    for (Index f = 0; f < p.num_facets(); ++f) {
        facets.push_back({p.facet(f).normal + speeds[static_cast<std::size_t>(f)] * t, Rational(1), p.facet(f).vertices});
    }
    try {
        return validate_incidences(verts, std::move(facets));
    } catch (const Error& e) {
        throw Error(ErrorCode::EpsilonTooLarge, "t = " + to_string(t) + " leaves the radial family: " + e.what());
    }
}

RadialFamily radial_family(const Polytope& p, const RVector& g)
{
    require_origin_interior(p);
    require_speed_size(p, g);
    if (!is_facewise_affine(p, g)) {
        throw Error(ErrorCode::NotFacewiseAffine, "speed is not facewise affine");
    }
    return {p, g, eps_bound(p, g)};
}

DerivativeReport boundary_first_derivatives(const Polytope& p, const RVector& g)
{
    const int n = static_cast<int>(p.dim());
    const auto speeds = facet_speeds(p, g);
    const BoundaryIntegrator integrator(p);
    DerivativeReport out;
    out.d_x = RVector::Zero(n);
    out.d_xx = RMatrix::Zero(n, n);
    for (Index f = 0; f < p.num_facets(); ++f) {
        const Polynomial speed = Polynomial::affine(speeds[static_cast<std::size_t>(f)], Rational(0));
        out.d_vol -= integrator.cone_weighted(f, speed);
        for (Index i = 0; i < n; ++i) {
            const Polynomial xi = coordinate(n, i) * speed;
            out.d_x(i) -= integrator.cone_weighted(f, xi);
            for (Index j = i; j < n; ++j) {
                out.d_xx(i, j) -= integrator.cone_weighted(f, coordinate(n, j) * xi);
            }
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < i; ++j) {
            out.d_xx(i, j) = out.d_xx(j, i);
        }
    }
    out.d_x2 = out.d_xx.trace();
    return out;
}

DerivativeReport boundary_second_derivatives(const Polytope& p, const RVector& g)
{
    const int n = static_cast<int>(p.dim());
    const auto speeds = facet_speeds(p, g);
    const BoundaryIntegrator integrator(p);
    const Polynomial norm2 = Polynomial::squared_norm(n);
    DerivativeReport out;
    for (Index f = 0; f < p.num_facets(); ++f) {
        const Polynomial speed = Polynomial::affine(speeds[static_cast<std::size_t>(f)], Rational(0));
        const Polynomial speed2 = speed * speed;
        out.dd_vol += integrator.cone_weighted(f, speed2);
        out.dd_x2 += integrator.cone_weighted(f, speed2 * norm2);
    }
    out.dd_vol *= n + 1;
    out.dd_x2 *= n + 3;
    return out;
}

DerivativeReport boundary_derivatives(const Polytope& p, const RVector& g)
{
    DerivativeReport out = boundary_first_derivatives(p, g);
    const DerivativeReport second = boundary_second_derivatives(p, g);
    out.dd_vol = second.dd_vol;
    out.dd_x2 = second.dd_x2;
    return out;
}

Rational quadric_term(const Polytope& p, const RVector& g)
{
    const int n = static_cast<int>(p.dim());
    const auto speeds = facet_speeds(p, g);
    const BoundaryIntegrator integrator(p);
    const Polynomial weight = Polynomial::squared_norm(n) - Polynomial::constant(n, Rational(n + 2));
    Rational q(0);
    for (Index f = 0; f < p.num_facets(); ++f) {
        const Polynomial speed = Polynomial::affine(speeds[static_cast<std::size_t>(f)], Rational(0));
        q += integrator.cone_weighted(f, speed * speed * weight);
    }
    return q;
}

Rational q_inequality_margin(const Polytope& p, const RVector& g)
{
    const Index n = p.dim();
    const DerivativeReport d = boundary_second_derivatives(p, g);
    return d.dd_x2 - (n + 2) * d.dd_vol - (n + 3) * quadric_term(p, g);
}

RMatrix moment_derivative_map(const Polytope& p, const FacewiseAffineSpace& space)
{
    const Index n = p.dim();
    RMatrix a(n * (n + 1) / 2 + n, space.dimension());
    for (Index k = 0; k < space.dimension(); ++k) {
        const DerivativeReport d = boundary_first_derivatives(p, space.basis.col(k));
        Index r = 0;
        for (Index i = 0; i < n; ++i) {
            for (Index j = i; j < n; ++j) {
                a(r++, k) = d.d_xx(i, j);
            }
        }
        for (Index i = 0; i < n; ++i) {
            a(r++, k) = d.d_x(i);
        }
    }
    return a;
}

std::optional<RVector> kernel_direction(const Polytope& p)
{
    require_origin_interior(p);
    const FacewiseAffineSpace space = facewise_affine_space(p);
    const RMatrix kernel = kernel_basis(moment_derivative_map(p, space));
    if (kernel.cols() == 0) {
        return std::nullopt;
    }
    RVector g = space.basis * kernel.col(0);
    return RVector(g / max_abs(g));
}

FiniteDifferenceReport finite_difference_report(const Polytope& p, const RVector& g, const Rational& h)
{
    const auto samples = sample_moments(p, g, h);
    const Index n = p.dim();
    auto first = [&](auto&& pick) {
        std::array<Rational, 5> f;
        for (std::size_t k = 0; k < 5; ++k) {
            f[k] = pick(samples[k]);
        }
        return f;
    };
    FiniteDifferenceReport out;
    out.h = h;
    const auto vol = first([](const MomentData& m) { return m.volume; });
    const auto x2 = first([](const MomentData& m) { return Rational(m.second.trace()); });
    const auto lk = first([](const MomentData& m) { return lk_from_moments(m); });
    out.d_vol = to_double(richardson_first(vol, h));
    out.d_x2 = to_double(richardson_first(x2, h));
    out.dd_vol = to_double(richardson_second(vol, h));
    out.dd_x2 = to_double(richardson_second(x2, h));
    out.d_L = to_double(richardson_first(lk, h));
    out.dd_L = to_double(richardson_second(lk, h));
    out.d_x = Eigen::VectorXd(n);
    out.d_xx = Eigen::MatrixXd(n, n);
    for (Index i = 0; i < n; ++i) {
        out.d_x(i) = to_double(richardson_first(first([&](const MomentData& m) { return m.first(i); }), h));
        for (Index j = 0; j < n; ++j) {
            out.d_xx(i, j) = to_double(richardson_first(first([&](const MomentData& m) { return m.second(i, j); }), h));
        }
    }
    return out;
}

double finite_difference_oracle(const Polytope& p, const RVector& g, QuantitySpec q, const Rational& h, int order)
{
    const auto samples = sample_moments(p, g, h);
    std::array<Rational, 5> f;
    for (std::size_t k = 0; k < 5; ++k) {
        const MomentData& m = samples[k];
        switch (q.kind) {
        case Quantity::Volume: f[k] = m.volume; break;
        case Quantity::FirstMoment: f[k] = m.first(q.i); break;
        case Quantity::SecondMoment: f[k] = m.second(q.i, q.j); break;
        case Quantity::SquaredNorm: f[k] = m.second.trace(); break;
        case Quantity::LPow2n: f[k] = lk_from_moments(m); break;
        }
    }
    return to_double(order == 2 ? richardson_second(f, h) : richardson_first(f, h));
}

LkSecondDerivative lk_second_derivative(const Polytope& p_iso, const RVector& g, const Rational& h)
{
    const Index n = p_iso.dim();
    const MomentData m = body_moments(p_iso);
    const RVector c = m.first / m.volume;
    const RMatrix cov = m.second / m.volume - c * c.transpose();
    const double off_identity = to_double(max_abs(cov - RMatrix::Identity(n, n)));
    const double off_center = to_double(max_abs(c));
    if (off_identity > isotropy_tolerance || off_center > isotropy_tolerance) {
        throw Error(ErrorCode::NotIsotropic, "covariance differs from I by " + std::to_string(off_identity) +
                                                 ", centroid off the origin by " + std::to_string(off_center));
    }
    LkSecondDerivative out;
    out.derivatives = boundary_derivatives(p_iso, g);
    const DerivativeReport& d = out.derivatives;
    const double scale = std::max(1.0, std::abs(to_double(d.d_vol)));
    if (to_double(max_abs(d.d_x)) > centering_tolerance * scale) {
        throw Error(ErrorCode::NotCentered, "the variation moves the centroid (d/dt of the first moments is nonzero)");
    }
    const Rational& v = m.volume;
    Rational sum_sq(0);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            sum_sq += d.d_xx(i, j) * d.d_xx(i, j);
        }
    }
    const Rational first_part = (Rational(n * n + 5 * n + 6) * d.d_vol * d.d_vol + d.d_x2 * d.d_x2 -
                                 Rational(2 * n + 4) * d.d_vol * d.d_x2 - sum_sq) /
                                (v * v * v * v);
    const Rational second_part = (d.dd_x2 - Rational(n + 2) * d.dd_vol) / (v * v * v);
    out.value = to_double(first_part + second_part);
    out.fd_value = finite_difference_oracle(p_iso, g, {Quantity::LPow2n}, h, 2);
    out.certificate = out.value > 0 && out.fd_value > 0;
    return out;
}

Isotropized isotropize(const Polytope& p, const Integer& denominator)
{
    const IsotropyReport report = isotropy(p);
    const Index n = p.dim();
    Isotropized out;
    out.map = RMatrix(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            out.map(i, j) = snap(report.isotropizing_map(i, j), denominator);
        }
    }
    out.shift = -(out.map * report.centroid);
    out.body = affine_image(p, out.map, out.shift);
    const IsotropyReport check = isotropy(out.body);
    out.residual = to_double(max_abs(check.covariance - RMatrix::Identity(n, n)));
    return out;
}

CertificateReport certify(const Polytope& p, const Rational& h)
{
    CertificateReport out;
    out.iso = isotropize(p);
    out.threshold = threshold_check(out.iso.body);
    out.direction = kernel_direction(out.iso.body);
    if (out.direction) {
        Rational step = h;
        const Rational eps = eps_bound(out.iso.body, *out.direction);
        while (2 * step > eps) {
            step /= 10;
        }
        out.second = lk_second_derivative(out.iso.body, *out.direction, step);
        out.q_margin = to_double(q_inequality_margin(out.iso.body, *out.direction));
    }
    return out;
}

Polytope shadow_polytope(const ShadowSystem& s, const Rational& t)
{
    if (t < s.t_min || t > s.t_max) {
        throw Error(ErrorCode::DimensionMismatch, "t = " + to_string(t) + " outside the shadow system's range");
    }
    const Polytope& p = s.base;
    if (s.direction.size() != p.dim() || s.speeds.size() != p.num_vertices()) {
        throw Error(ErrorCode::DimensionMismatch, "shadow system direction or speeds do not match the base");
    }
    RMatrix points = p.vertices();
    for (Index v = 0; v < p.num_vertices(); ++v) {
        points.col(v) += s.direction * (t * s.speeds(v));
    }
    try {
        return hull_facets(points);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotFullDimensional) {
            throw Error(ErrorCode::Degenerate, "shadow at t = " + to_string(t) + " is not full-dimensional");
        }
        throw;
    }
}

Index rs_speed_space(const Polytope& p, const RVector& u)
{
    if (u.size() != p.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "direction does not match the polytope dimension");
    }
    if (u.isZero()) {
        throw Error(ErrorCode::CaseNotSupported, "zero direction");
    }
    for (Index f = 0; f < p.num_facets(); ++f) {
        if (is_zero(p.facet(f).normal.dot(u))) {
            throw Error(ErrorCode::CaseNotSupported, "facet " + std::to_string(f) + " is parallel to the direction");
        }
    }
    const Rational uu = u.squaredNorm();
    for (Index v = 0; v < p.num_vertices(); ++v) {
        const RVector projected = p.vertex(v) - u * (p.vertex(v).dot(u) / uu);
        for (const auto& f : p.facets()) {
            if (f.normal.dot(projected) > f.offset) {
                throw Error(ErrorCode::CaseNotSupported,
                            "projection onto the orthogonal hyperplane is larger than the section");
            }
        }
    }
    return facewise_affine_space(p).dimension();
}

} // namespace isodecomp
