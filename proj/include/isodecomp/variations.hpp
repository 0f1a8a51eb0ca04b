#ifndef ISODECOMP_VARIATIONS_HPP
#define ISODECOMP_VARIATIONS_HPP

// Radial families x -> ||x||_P + t f(x) with f facewise linear on the cones
// over the facets of P, the exact first and second derivatives of the
// moment functionals along them, a finite difference oracle, shadow systems
// and the isotropization/certificate pipeline.

#include <optional>
#include <vector>

#include "isodecomp/decomp.hpp"
#include "isodecomp/moments.hpp"

namespace isodecomp {

/// Linear form l_F with <l_F, v> = g(v) on the vertices of facet f, i.e. the
/// homogeneous extension of g on the cone over f. Needs the origin in the
/// interior; throws NotFacewiseAffine when g is not affine on the facet.
RVector facet_speed(const Polytope& p, Index f, const RVector& g);

/// Conservative validity radius of the radial family of P with speed g:
/// half the first |t| at which a vertex meets a non-incident moved facet,
/// capped by |t g(v)| <= 1/2 and by 1 (also returned for g = 0).
Rational eps_bound(const Polytope& p, const RVector& g);

/// Vertices v / (1 + t g(v)), facets <a_F + t l_F, x> <= 1 with the same
/// incidences. Throws EpsilonTooLarge when t leaves the family's validity
/// range.
Polytope radial_polytope(const Polytope& p, const RVector& g, const Rational& t);

struct RadialFamily
{
    Polytope base;
    RVector speed;
    Rational eps;
};

/// Checks g in F(P) and the origin position, and fixes eps = eps_bound.
RadialFamily radial_family(const Polytope& p, const RVector& g);

struct DerivativeReport
{
    // first derivatives at t = 0
    Rational d_vol;
    Rational d_x2;
    RVector d_x;
    RMatrix d_xx;
    // second derivatives at t = 0
    Rational dd_vol;
    Rational dd_x2;
};

/// d/dt of vol, integral of x, of x x^T and of |x|^2 at t = 0:
/// minus the cone-weighted boundary integrals of h f.
DerivativeReport boundary_first_derivatives(const Polytope& p, const RVector& g);

/// Adds dd_vol = (n+1) sum_F w_F(f^2) and dd_x2 = (n+3) sum_F w_F(f^2 |x|^2)
/// where w_F is the cone-weighted facet integral.
DerivativeReport boundary_second_derivatives(const Polytope& p, const RVector& g);

/// Both orders.
DerivativeReport boundary_derivatives(const Polytope& p, const RVector& g);

/// sum_F w_F(f^2 (|x|^2 - (n+2))).
Rational quadric_term(const Polytope& p, const RVector& g);

/// dd_x2 - (n+2) dd_vol - (n+3) Q. Positive for g != 0.
Rational q_inequality_margin(const Polytope& p, const RVector& g);

/// Matrix of the map g -> (upper triangle of d_xx, d_x) on the basis of F(P).
RMatrix moment_derivative_map(const Polytope& p, const FacewiseAffineSpace& space);

/// A nonzero g in F(P) whose first derivatives of all first and second
/// moments vanish, scaled to max |g(v)| = 1; empty when the map above is
/// injective.
std::optional<RVector> kernel_direction(const Polytope& p);

enum class Quantity
{
    Volume,
    FirstMoment,   // integral of x_i
    SecondMoment,  // integral of x_i x_j
    SquaredNorm,   // integral of |x|^2
    LPow2n,
};

struct QuantitySpec
{
    Quantity kind = Quantity::Volume;
    Index i = 0;
    Index j = 0;
};

/// Richardson-extrapolated central difference (order 1 or 2) of the exact
/// quantity along the radial family, sampled at t in {±h, ±2h} (and 0).
/// Throws StepTooLarge when 2h exceeds eps_bound.
double finite_difference_oracle(const Polytope& p, const RVector& g, QuantitySpec q, const Rational& h,
                                int order = 1);

struct FiniteDifferenceReport
{
    Rational h;
    double d_vol = 0;
    double d_x2 = 0;
    Eigen::VectorXd d_x;
    Eigen::MatrixXd d_xx;
    double dd_vol = 0;
    double dd_x2 = 0;
    double d_L = 0;
    double dd_L = 0;
};

/// All quantities from one set of five exact moment evaluations.
FiniteDifferenceReport finite_difference_report(const Polytope& p, const RVector& g, const Rational& h);

struct LkSecondDerivative
{
    double value = 0;
    double fd_value = 0;
    bool certificate = false;
    DerivativeReport derivatives;
};

/// Default tolerances for lk_second_derivative.
constexpr double isotropy_tolerance = 1e-8;
constexpr double centering_tolerance = 1e-9;

/// d^2/dt^2 L^{2n} at t = 0 for an isotropic body, assembled from the exact
/// derivative report, and the finite difference value at step h.
/// Throws NotIsotropic (covariance off identity or centroid off the origin
/// beyond tolerance) or NotCentered (d_x != 0).
LkSecondDerivative lk_second_derivative(const Polytope& p_iso, const RVector& g, const Rational& h);

struct Isotropized
{
    Polytope body;
    RMatrix map;    // rational snap of A^{-1/2}
    RVector shift;  // -map * centroid
    double residual = 0;  // max |entry| of covariance - I, exact body
};

/// Exact image x -> M (x - c) of P under the snapped isotropizing map; the
/// centroid lands exactly at the origin.
Isotropized isotropize(const Polytope& p, const Integer& denominator = Integer("1000000000000"));

struct CertificateReport
{
    Isotropized iso;
    ThresholdCheck threshold;
    std::optional<RVector> direction;
    std::optional<LkSecondDerivative> second;
    double q_margin = 0;
};

/// Isotropize, look for a kernel direction of the moment derivative map and
/// evaluate d^2 L^{2n} along it.
CertificateReport certify(const Polytope& p, const Rational& h);

struct ShadowSystem
{
    Polytope base;
    RVector direction;
    RVector speeds;  // per vertex
    Rational t_min;
    Rational t_max;
};

/// conv{v + t beta(v) u}. Throws Degenerate when the hull collapses and
/// DimensionMismatch when t lies outside [t_min, t_max].
Polytope shadow_polytope(const ShadowSystem& s, const Rational& t);

/// Dimension of the space of generalized speed functions in direction u for
/// the case where P has no facet parallel to u and the orthogonal projection
/// of P onto u^perp equals its section; there it equals dim F(P). Other
/// cases throw CaseNotSupported.
Index rs_speed_space(const Polytope& p, const RVector& u);

} // namespace isodecomp

#endif // ISODECOMP_VARIATIONS_HPP
