#include "isodecomp/moments.hpp"

#include <algorithm>
#include <cmath>

namespace isodecomp {

namespace {

Integer factorial(int k)
{
    Integer out(1);
    for (int i = 2; i <= k; ++i) {
        out *= i;
    }
    return out;
}

Index lex_smallest(const RMatrix& points, const std::vector<Index>& subset)
{
    Index best = subset.front();
    for (Index i : subset) {
        if (lex_compare(points.col(i), points.col(best)) < 0) {
            best = i;
        }
    }
    return best;
}

RMatrix edge_matrix(const Simplex& s)
{
    RMatrix edges(s.rows(), s.cols() - 1);
    for (Index j = 1; j < s.cols(); ++j) {
        edges.col(j - 1) = s.col(j) - s.col(0);
    }
    return edges;
}

Index first_nonzero(const RVector& v)
{
    Index k = 0;
    while (k < v.size() && is_zero(v(k))) {
        ++k;
    }
    return k;
}

} // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int n, const Rational& c)
{
    Polynomial p(n);
    p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return p;
}

Polynomial Polynomial::variable(int n, int i)
{
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e);
}

Polynomial Polynomial::affine(const RVector& a, const Rational& c)
{
    const int n = static_cast<int>(a.size());
    Polynomial p = constant(n, c);
    for (int i = 0; i < n; ++i) {
        p += variable(n, i) * a(i);
    }
    return p;
}

Polynomial Polynomial::squared_norm(int n)
{
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 2;
        p.add_term(e, Rational(1));
    }
    return p;
}

Polynomial Polynomial::monomial(const Exponent& alpha, const Rational& c)
{
    Polynomial p(static_cast<int>(alpha.size()));
    p.add_term(alpha, c);
    return p;
}

int Polynomial::degree() const
{
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int k = 0;
        for (int a : e) {
            k += a;
        }
        d = std::max(d, k);
    }
    return d;
}

Rational Polynomial::operator()(const RVector& x) const
{
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                term *= x(static_cast<Index>(i));
            }
        }
        sum += term;
    }
    return sum;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (isodecomp::is_zero(c)) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (isodecomp::is_zero(it->second)) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (n_ == 0) {
        n_ = other.n_;
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (n_ == 0) {
        n_ = other.n_;
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (isodecomp::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out(std::max(a.n_, b.n_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triangulation

std::vector<std::vector<Index>> triangulate_points(const RMatrix& points, const std::vector<Index>& subset)
{
    std::vector<Index> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    const Index d = affine_rank([&] {
        RMatrix local(points.rows(), static_cast<Index>(sorted.size()));
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            local.col(static_cast<Index>(j)) = points.col(sorted[j]);
        }
        return local;
    }());
    if (static_cast<Index>(sorted.size()) == d + 1) {
        return {sorted};
    }
    const Index apex = lex_smallest(points, sorted);
    std::vector<std::vector<Index>> out;
    for (const auto& face : maximal_faces(points, sorted)) {
        if (std::binary_search(face.begin(), face.end(), apex)) {
            continue;
        }
        for (auto& piece : triangulate_points(points, face)) {
            piece.insert(piece.begin(), apex);
            out.push_back(std::move(piece));
        }
    }
    return out;
}

std::vector<Simplex> triangulate(const Polytope& p)
{
    const Index n = p.dim();
    std::vector<Index> all(static_cast<std::size_t>(p.num_vertices()));
    for (Index i = 0; i < p.num_vertices(); ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    const Index apex = lex_smallest(p.vertices(), all);
    std::vector<Simplex> out;
    for (const auto& f : p.facets()) {
        if (std::binary_search(f.vertices.begin(), f.vertices.end(), apex)) {
            continue;
        }
        for (const auto& piece : triangulate_points(p.vertices(), f.vertices)) {
            Simplex s(n, n + 1);
            s.col(0) = p.vertex(apex);
            for (Index j = 0; j < n; ++j) {
                s.col(j + 1) = p.vertex(piece[static_cast<std::size_t>(j)]);
            }
            if (sign(determinant(edge_matrix(s))) < 0) {
                s.col(1).swap(s.col(2 % (n + 1)));
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integration

Rational simplex_volume(const Simplex& s)
{
    return abs(determinant(edge_matrix(s))) / Rational(factorial(static_cast<int>(s.rows())));
}

Rational simplex_integral(const Simplex& s, const Rational& measure, const Polynomial& poly)
{
    if (poly.degree() > max_integrand_degree) {
        throw Error(ErrorCode::UnsupportedDegree,
                    "integrand degree " + std::to_string(poly.degree()) + " exceeds " +
                        std::to_string(max_integrand_degree));
    }
    const Index d = s.cols() - 1;
    using LambdaPoly = std::map<std::vector<int>, Rational>;
    Rational total(0);
    for (const auto& [alpha, coeff] : poly.terms()) {
        // x_i = sum_j lambda_j s(i, j); expand x^alpha in the lambdas.
        LambdaPoly expansion;
        expansion.emplace(std::vector<int>(static_cast<std::size_t>(d + 1), 0), Rational(1));
        int k = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            for (int rep = 0; rep < alpha[i]; ++rep) {
                LambdaPoly next;
                for (const auto& [e, c] : expansion) {
                    for (Index j = 0; j <= d; ++j) {
                        const Rational& w = s(static_cast<Index>(i), j);
                        if (isodecomp::is_zero(w)) {
                            continue;
                        }
                        std::vector<int> e2 = e;
                        ++e2[static_cast<std::size_t>(j)];
                        next[e2] += c * w;
                    }
                }
                expansion = std::move(next);
                ++k;
            }
        }
        // Dirichlet: int prod lambda^a = d! vol prod a! / (|a| + d)!
        Rational sum(0);
        for (const auto& [e, c] : expansion) {
            Integer num(1);
            for (int a : e) {
                num *= factorial(a);
            }
            sum += c * Rational(num);
        }
        total += coeff * sum * Rational(factorial(static_cast<int>(d)), factorial(k + static_cast<int>(d)));
    }
    return total * measure;
}

Rational simplex_monomial_integral(const Simplex& s, const Polynomial::Exponent& alpha)
{
    return simplex_integral(s, simplex_volume(s), Polynomial::monomial(alpha));
}

Rational body_integral(const Polytope& p, const Polynomial& poly)
{
    Rational total(0);
    for (const auto& s : triangulate(p)) {
        total += simplex_integral(s, simplex_volume(s), poly);
    }
    return total;
}

MomentData body_moments(const Polytope& p)
{
    const Index n = p.dim();
    MomentData out{Rational(0), RVector::Zero(n), RMatrix::Zero(n, n)};
    const Rational k1(1, n + 1);
    const Rational k2(1, (n + 1) * (n + 2));
    for (const auto& s : triangulate(p)) {
        const Rational vol = simplex_volume(s);
        const RVector sum = s.rowwise().sum();
        out.volume += vol;
        out.first += sum * (vol * k1);
        out.second += (s * s.transpose() + sum * sum.transpose()) * (vol * k2);
    }
    for (Index k = 1; k <= n; ++k) {
        if (sign(determinant(out.second.topLeftCorner(k, k))) <= 0) {
            throw Error(ErrorCode::DegeneratePolytope, "second moment matrix is not positive definite");
        }
    }
    return out;
}

namespace {

void fill_exact_isotropy(const Polytope& p, IsotropyReport& out)
{
    const MomentData m = body_moments(p);
    out.volume = m.volume;
    out.centroid = m.first / m.volume;
    out.covariance = m.second / m.volume - out.centroid * out.centroid.transpose();
    const Rational det = determinant(out.covariance);
    if (sign(det) <= 0) {
        throw Error(ErrorCode::DegeneratePolytope, "covariance matrix is singular");
    }
    out.L_pow_2n = det / (m.volume * m.volume);
}

} // namespace

IsotropyReport isotropy(const Polytope& p)
{
    IsotropyReport out;
    fill_exact_isotropy(p, out);
    const Eigen::MatrixXd a = to_double(out.covariance);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    out.isotropizing_map = solver.operatorInverseSqrt();
    const Eigen::MatrixXd mapped = out.isotropizing_map * a * out.isotropizing_map.transpose();
    out.residual = (mapped - Eigen::MatrixXd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
    return out;
}

Rational isotropic_constant_pow(const Polytope& p)
{
    IsotropyReport out;
    fill_exact_isotropy(p, out);
    return out.L_pow_2n;
}

double SurdValue::to_double() const
{
    return isodecomp::to_double(coeff) * std::sqrt(isodecomp::to_double(radicand));
}

BoundaryIntegrator::BoundaryIntegrator(const Polytope& p)
    : p_(&p), pieces_(static_cast<std::size_t>(p.num_facets())), cache_(static_cast<std::size_t>(p.num_facets()))
{
    for (const auto& facet : p.facets()) {
        const Index k = first_nonzero(facet.normal);
        radicand_.push_back(facet.normal.squaredNorm() / (facet.normal(k) * facet.normal(k)));
        weight_.push_back(facet.offset / abs(facet.normal(k)));
    }
}

const std::vector<BoundaryIntegrator::Piece>& BoundaryIntegrator::pieces(Index f) const
{
    auto& slot = pieces_[static_cast<std::size_t>(f)];
    if (slot) {
        return *slot;
    }
    const Index n = p_->dim();
    const Facet& facet = p_->facet(f);
    const Index k = first_nonzero(facet.normal);
    const Rational denom(factorial(static_cast<int>(n - 1)));
    std::vector<Piece> out;
    for (const auto& piece : triangulate_points(p_->vertices(), facet.vertices)) {
        Simplex s(n, n);
        for (Index j = 0; j < n; ++j) {
            s.col(j) = p_->vertex(piece[static_cast<std::size_t>(j)]);
        }
        RMatrix projected(n - 1, n - 1);
        for (Index i = 0, r = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            for (Index j = 1; j < n; ++j) {
                projected(r, j - 1) = s(i, j) - s(i, 0);
            }
            ++r;
        }
        Rational measure = abs(determinant(projected)) / denom;
        out.push_back({std::move(s), std::move(measure)});
    }
    slot = std::move(out);
    return *slot;
}

Rational BoundaryIntegrator::projected_integral(Index f, const Polynomial& poly) const
{
    if (poly.degree() > max_integrand_degree) {
        throw Error(ErrorCode::UnsupportedDegree,
                    "integrand degree " + std::to_string(poly.degree()) + " exceeds " +
                        std::to_string(max_integrand_degree));
    }
    auto& cache = cache_[static_cast<std::size_t>(f)];
    Rational total(0);
    for (const auto& [alpha, coeff] : poly.terms()) {
        auto it = cache.find(alpha);
        if (it == cache.end()) {
            Rational value(0);
            const Polynomial mono = Polynomial::monomial(alpha);
            for (const auto& piece : pieces(f)) {
                value += simplex_integral(piece.vertices, piece.measure, mono);
            }
            it = cache.emplace(alpha, std::move(value)).first;
        }
        total += coeff * it->second;
    }
    return total;
}

SurdValue BoundaryIntegrator::facet_integral(Index f, const Polynomial& poly) const
{
    return {projected_integral(f, poly), radicand_[static_cast<std::size_t>(f)]};
}

Rational BoundaryIntegrator::cone_weighted(Index f, const Polynomial& poly) const
{
    return projected_integral(f, poly) * weight_[static_cast<std::size_t>(f)];
}

Rational BoundaryIntegrator::cone_weighted_total(const Polynomial& poly) const
{
    Rational total(0);
    for (Index f = 0; f < p_->num_facets(); ++f) {
        total += cone_weighted(f, poly);
    }
    return total;
}

SurdValue facet_integral(const Polytope& p, Index f, const Polynomial& poly)
{
    return BoundaryIntegrator(p).facet_integral(f, poly);
}

Rational cone_weighted_facet_integral(const Polytope& p, Index f, const Polynomial& poly)
{
    return BoundaryIntegrator(p).cone_weighted(f, poly);
}

Rational cone_weighted_boundary_integral(const Polytope& p, const Polynomial& poly)
{
    return BoundaryIntegrator(p).cone_weighted_total(poly);
}

} // namespace isodecomp
