#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

/**
 * Scalar and container vocabulary shared by every module.
 *
 * All arithmetic is exact: integers are GMP-backed arbitrary precision
 * values and rationals are GMP fractions that are always kept in lowest
 * terms with a positive denominator. Dense vectors and matrices are plain
 * Eigen containers templated on the scalar, so the usual block and
 * expression machinery is available on them.
 */
namespace latpoly {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

/// Coefficients c_0, c_1, ... of a univariate polynomial, lowest degree first.
using Polynomial = std::vector<Rational>;

/** Thrown when an input violates the documented precondition of an operation. */
class PreconditionError : public std::invalid_argument
{
    public:
        explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/** Thrown when an enumeration would exceed the configured work cap. */
class LimitExceeded : public PreconditionError
{
    public:
        explicit LimitExceeded(const std::string& what) : PreconditionError(what) {}
};

/** Bounds on the amount of brute-force enumeration an operation may perform. */
struct EnumerationLimits
{
    /// Maximum number of integer points in any scanned bounding box.
    Integer max_box = 10'000'000;
};

inline Integer floor_of(const Rational& q)
{
    Integer num = numerator(q);
    Integer den = denominator(q);
    Integer f = num / den;  // truncates toward zero
    if (num < 0 && f * den != num)
        f -= 1;
    return f;
}

inline Integer ceil_of(const Rational& q)
{
    return -floor_of(-q);
}

inline bool is_integral(const Rational& q)
{
    return denominator(q) == 1;
}

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!is_integral(Rational(m(i, j))))
                return false;
    return true;
}

inline RatMatrix to_rational(const IntMatrix& m)
{
    return m.unaryExpr([](const Integer& x) { return Rational(x); });
}

inline RatVector to_rational(const IntVector& v)
{
    return v.unaryExpr([](const Integer& x) { return Rational(x); });
}

/// Converts an integral rational matrix; throws PreconditionError otherwise.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

/// Renders a rational as "p" or "p/q".
std::string to_string(const Rational& q);
/// Parses "p" or "p/q" (optional sign, no decimals).
Rational parse_rational(const std::string& text);

Integer binomial(long n, long k);
Integer factorial(long n);

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<Index>> combinations(Index n, Index k);

/// Advances `c` to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<Index>& c, Index n);

}  // namespace latpoly
