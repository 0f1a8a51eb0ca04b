#include "isodecomp/exactnum.hpp"

#include <cctype>
#include <cmath>

namespace isodecomp {

std::string to_string(const Rational& r)
{
    return r.str();
}

Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'"); };
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw fail();
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const Rational num = parse_rational(s.substr(0, slash));
        const Rational den = parse_rational(s.substr(slash + 1));
        if (den.is_zero()) {
            throw fail();
        }
        return num / den;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) {
                --scale;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        throw fail();
    }
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') {
            throw fail();
        }
        ++pos;
        std::size_t used = 0;
        long exponent = 0;
        try {
            exponent = std::stol(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (pos + used != s.size() || std::labs(exponent) > 10000) {
            throw fail();
        }
        scale += exponent;
    }
    Integer value(digits);
    Integer ten_power = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(scale)));
    Rational out = scale >= 0 ? Rational(value * ten_power) : Rational(value, ten_power);
    return negative ? Rational(-out) : out;
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

Eigen::VectorXd to_double(const RVector& v)
{
    Eigen::VectorXd out(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        out(i) = to_double(v(i));
    }
    return out;
}

Eigen::MatrixXd to_double(const RMatrix& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            out(i, j) = to_double(m(i, j));
        }
    }
    return out;
}

std::string to_decimal(const Rational& r, int precision_bits)
{
    if (r.is_zero()) {
        return "0";
    }
    const int digits = std::max(1, static_cast<int>(std::ceil(precision_bits * std::log10(2.0))) + 1);
    Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    // exponent e with 10^e <= |r| < 10^(e+1)
    long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
    auto at_least_pow10 = [&](long k) {
        // |r| >= 10^k ?
        if (k >= 0) {
            return num >= den * boost::multiprecision::pow(Integer(10), static_cast<unsigned>(k));
        }
        return num * boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-k)) >= den;
    };
    while (!at_least_pow10(e)) {
        --e;
    }
    while (at_least_pow10(e + 1)) {
        ++e;
    }
    // scaled = round(|r| * 10^(digits - 1 - e))
    const long shift = digits - 1 - e;
    Integer scaled_num = num;
    Integer scaled_den = den;
    if (shift >= 0) {
        scaled_num *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift));
    } else {
        scaled_den *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-shift));
    }
    Integer q = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    std::string mantissa = q.str();
    if (static_cast<int>(mantissa.size()) > digits) {
        // rounding carried into a new digit (e.g. 9.99 -> 10.0)
        mantissa.pop_back();
        ++e;
    }
    std::string out = negative ? "-" : "";
    out += mantissa.substr(0, 1);
    if (mantissa.size() > 1) {
        out += "." + mantissa.substr(1);
    }
    out += "e" + std::to_string(e);
    return out;
}

Rational snap(double x, const Integer& denominator)
{
    const double scaled = std::nearbyint(x * denominator.convert_to<double>());
    return Rational(Integer(scaled), denominator);
}

std::optional<Rational> exact_sqrt(const Rational& r)
{
    if (r.sign() < 0) {
        return std::nullopt;
    }
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) {
        return std::nullopt;
    }
    return Rational(sn, sd);
}

RVector solve(const RMatrix& m, const RVector& b)
{
    if (m.rows() != m.cols() || m.rows() != b.size()) {
        throw Error(ErrorCode::NonSquare, "solve needs a square system");
    }
    RMatrix augmented(m.rows(), m.cols() + 1);
    augmented << m, b;
    const auto red = rref(augmented);
    if (red.rank != m.rows() || red.pivots.back() == m.cols()) {
        throw Error(ErrorCode::SingularMatrix, "linear system is singular");
    }
    return red.reduced.col(m.cols());
}

RMatrix inverse(const RMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
    }
    const Index n = m.rows();
    RMatrix augmented(n, 2 * n);
    augmented << m, RMatrix::Identity(n, n);
    const auto red = rref(augmented);
    if (red.rank < n || red.pivots[static_cast<std::size_t>(n - 1)] >= n) {
        throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    }
    return red.reduced.rightCols(n);
}

Index affine_rank(const RMatrix& points)
{
    if (points.cols() <= 1) {
        return 0;
    }
    RMatrix diffs(points.rows(), points.cols() - 1);
    for (Index j = 1; j < points.cols(); ++j) {
        diffs.col(j - 1) = points.col(j) - points.col(0);
    }
    return rank(diffs);
}

int lex_compare(const RVector& a, const RVector& b)
{
    for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a(i) < b(i)) {
            return -1;
        }
        if (b(i) < a(i)) {
            return 1;
        }
    }
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    return 0;
}

} // namespace isodecomp
