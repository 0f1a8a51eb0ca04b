#ifndef ISODECOMP_MOMENTS_HPP
#define ISODECOMP_MOMENTS_HPP

#include <map>
#include <vector>

#include "isodecomp/polytope.hpp"

namespace isodecomp {

/// Sparse polynomial in n variables with rational coefficients.
class Polynomial
{
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, Rational>;

    explicit Polynomial(int n = 0) : n_(n) {}

    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int i);
    /// <a, x> + c
    static Polynomial affine(const RVector& a, const Rational& c);
    /// ||x||^2
    static Polynomial squared_norm(int n);
    static Polynomial monomial(const Exponent& alpha, const Rational& c = Rational(1));

    int dim() const { return n_; }
    int degree() const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational operator()(const RVector& x) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    void add_term(const Exponent& e, const Rational& c);

    int n_;
    Terms terms_;
};

constexpr int max_integrand_degree = 4;

/// Simplices as n x (d+1) vertex matrices.
using Simplex = RMatrix;

/// Pulling triangulation of P into positively oriented n-simplices.
std::vector<Simplex> triangulate(const Polytope& p);

/// Pulling triangulation of conv(points[subset]) in its own affine hull,
/// returned as index lists of size dim + 1.
std::vector<std::vector<Index>> triangulate_points(const RMatrix& points, const std::vector<Index>& subset);

/// |det| of the edge matrix of a full-dimensional simplex, over n!.
Rational simplex_volume(const Simplex& s);

/// Integral of `poly` over a d-simplex whose vertices are the columns of `s`,
/// for the measure under which the simplex has total mass `measure`.
/// Any measure pushed forward from the standard simplex works (Lebesgue
/// volume, or a coordinate projection of a facet).
Rational simplex_integral(const Simplex& s, const Rational& measure, const Polynomial& poly);

/// Integral of x^alpha over a full-dimensional simplex, |alpha| <= 4.
Rational simplex_monomial_integral(const Simplex& s, const Polynomial::Exponent& alpha);

/// Exact integral of `poly` over P.
Rational body_integral(const Polytope& p, const Polynomial& poly);

struct MomentData
{
    Rational volume;
    RVector first;   // integral of x
    RMatrix second;  // integral of x x^T
};

/// Volume, first and second moments. Throws DegeneratePolytope unless the
/// second moment matrix is positive definite.
MomentData body_moments(const Polytope& p);

struct IsotropyReport
{
    Rational volume;
    RVector centroid;
    RMatrix covariance;
    Rational L_pow_2n;
    /// Approximately A^{-1/2}; x -> M (x - centroid) is close to isotropic.
    Eigen::MatrixXd isotropizing_map;
    /// max |entry| of the covariance of the mapped body minus I.
    double residual = 0;
};

/// L^{2n} = det(A) / vol^2 for the covariance A of P; the isotropizing map is
/// computed in double precision.
IsotropyReport isotropy(const Polytope& p);

/// L^{2n} only, without the floating point part.
Rational isotropic_constant_pow(const Polytope& p);

/// Value coeff * sqrt(radicand).
struct SurdValue
{
    Rational coeff;
    Rational radicand;

    double to_double() const;
};

/// Surface integrals over the facets of one polytope. Facet triangulations
/// and monomial integrals are computed on first use and cached, so an
/// instance must not be shared between threads.
///
/// The facet measure is the measure of the projection dropping the first
/// coordinate k with a_k != 0, times sqrt(|a|^2 / a_k^2).
class BoundaryIntegrator
{
public:
    explicit BoundaryIntegrator(const Polytope& p);

    SurdValue facet_integral(Index f, const Polynomial& poly) const;

    /// (b_F / |a_F|) * facet_integral: weighted by the distance of the facet
    /// hyperplane from the origin. Always rational.
    Rational cone_weighted(Index f, const Polynomial& poly) const;

    /// Sum of cone_weighted over all facets. For poly homogeneous of degree
    /// k this equals (n + k) times the integral over P.
    Rational cone_weighted_total(const Polynomial& poly) const;

    const Polytope& polytope() const { return *p_; }

private:
    struct Piece
    {
        Simplex vertices;
        Rational measure;
    };

    Rational projected_integral(Index f, const Polynomial& poly) const;
    const std::vector<Piece>& pieces(Index f) const;

    const Polytope* p_;
    std::vector<Rational> radicand_;
    std::vector<Rational> weight_;
    mutable std::vector<std::optional<std::vector<Piece>>> pieces_;
    mutable std::vector<std::map<Polynomial::Exponent, Rational>> cache_;
};

SurdValue facet_integral(const Polytope& p, Index f, const Polynomial& poly);
Rational cone_weighted_facet_integral(const Polytope& p, Index f, const Polynomial& poly);
Rational cone_weighted_boundary_integral(const Polytope& p, const Polynomial& poly);

} // namespace isodecomp

#endif // ISODECOMP_MOMENTS_HPP
