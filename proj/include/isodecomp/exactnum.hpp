#ifndef ISODECOMP_EXACTNUM_HPP
#define ISODECOMP_EXACTNUM_HPP

// Exact rational scalars, dense rational matrices and the elimination
// kernels (RREF, kernel, Bareiss determinant) that the rest of the library
// is built on. Dense types are plain Eigen matrices over a GMP rational.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isodecomp/error.hpp"

namespace isodecomp {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;

// ---------------------------------------------------------------------------
// Scalar helpers

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline int sign(const Rational& r) { return r.sign(); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", and finite decimals such as "-1.25" or "3e-4".
Rational parse_rational(std::string_view text);

/// Nearest double (ties are irrelevant at the precision reports use).
double to_double(const Rational& r);

/// Decimal rendering of r with enough significant digits to represent a
/// binary float of `precision_bits` bits, rounded from the exact value.
std::string to_decimal(const Rational& r, int precision_bits);

/// Exact rational with denominator `denominator` closest to x.
Rational snap(double x, const Integer& denominator);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

Eigen::VectorXd to_double(const RVector& v);
Eigen::MatrixXd to_double(const RMatrix& m);

// ---------------------------------------------------------------------------
// Elimination kernels

template <typename Scalar>
struct RrefResult
{
    Matrix<Scalar> reduced;
    Index rank = 0;
    std::vector<Index> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
///
/// The pivot in each column is the first row with a nonzero entry, so the
/// result is independent of entry magnitudes (and unique, as RREF is).
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    RrefResult<Scalar> out;
    Matrix<Scalar> m = input;
    const Index rows = m.rows();
    const Index cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && m(p, c) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            m.row(p).swap(m.row(r));
        }
        const Scalar inv = Scalar(1) / m(r, c);
        for (Index j = c; j < cols; ++j) {
            if (m(r, j) != 0) {
                m(r, j) *= inv;
            }
        }
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) {
                continue;
            }
            const Scalar factor = m(i, c);
            for (Index j = c; j < cols; ++j) {
                if (m(r, j) != 0) {
                    m(i, j) -= factor * m(r, j);
                }
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    return rref(m).rank;
}

/// Basis of the right kernel, one vector per column. Columns are the
/// standard RREF kernel basis: free variable j set to 1, the other free
/// variables 0.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Index cols = m.cols();
    if (m.rows() == 0) {
        return Matrix<Scalar>::Identity(cols, cols);
    }
    const auto red = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : red.pivots) {
        is_pivot[static_cast<std::size_t>(p)] = true;
    }
    Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, cols - red.rank);
    Index k = 0;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) {
            continue;
        }
        basis(f, k) = Scalar(1);
        for (Index i = 0; i < red.rank; ++i) {
            basis(red.pivots[static_cast<std::size_t>(i)], k) = -red.reduced(i, f);
        }
        ++k;
    }
    return basis;
}

/// Fraction-free (Bareiss) determinant.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) {
        throw Error(ErrorCode::NonSquare, "determinant of a " + std::to_string(input.rows()) + "x" +
                                              std::to_string(input.cols()) + " matrix");
    }
    const Index n = input.rows();
    if (n == 0) {
        return Scalar(1);
    }
    Matrix<Scalar> m = input;
    Scalar previous(1);
    bool negate = false;
    for (Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            Index p = k + 1;
            while (p < n && m(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return Scalar(0);
            }
            m.row(p).swap(m.row(k));
            negate = !negate;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
        }
        previous = m(k, k);
    }
    return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Solution of m x = b when m is square and invertible.
RVector solve(const RMatrix& m, const RVector& b);

RMatrix inverse(const RMatrix& m);

/// Dimension of the affine hull of the given points (columns).
Index affine_rank(const RMatrix& points);

/// Lexicographic comparison of equally sized rational vectors.
int lex_compare(const RVector& a, const RVector& b);

} // namespace isodecomp

#endif // ISODECOMP_EXACTNUM_HPP
