#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latpoly/types.hpp"

/**
 * Exact integer and rational linear algebra.
 *
 * Ranks and determinants use fraction-free (Bareiss) elimination so that
 * integer inputs never leave the integers. Normal forms follow the column
 * convention: H = M * U with U unimodular, pivots positive and entries to
 * the left of a pivot reduced into [0, pivot).
 */
namespace latpoly {

namespace detail {

template <typename Scalar>
bool is_zero(const Scalar& x) { return x == 0; }

// Fraction-free forward elimination in place. Returns the pivot columns
// (one per pivot row, in row order) and the sign of the row permutation.
template <typename Scalar>
std::pair<std::vector<Index>, int> bareiss_eliminate(Matrix<Scalar>& m)
{
    std::vector<Index> pivots;
    int sign = 1;
    Scalar prev = 1;
    Index r = 0;
    for (Index c = 0; c < m.cols() && r < m.rows(); ++c)
    {
        Index p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
        {
            m.row(p).swap(m.row(r));
            sign = -sign;
        }
        for (Index i = r + 1; i < m.rows(); ++i)
        {
            for (Index j = c + 1; j < m.cols(); ++j)
            {
                Scalar v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    return {pivots, sign};
}

}  // namespace detail

/// Rank over the rationals of an integer or rational matrix.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> work = m;
    return static_cast<Index>(detail::bareiss_eliminate(work).first.size());
}

/// Determinant of a square integer or rational matrix (Bareiss).
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw PreconditionError("determinant of a non-square matrix");
    if (m.rows() == 0)
        return Scalar(1);
    Matrix<Scalar> work = m;
    auto [pivots, sign] = detail::bareiss_eliminate(work);
    if (static_cast<Index>(pivots.size()) < m.rows())
        return Scalar(0);
    Scalar d = work(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? Scalar(-d) : d;
}

/**
 * Solves A X = B for square nonsingular rational A by Gauss-Jordan
 * elimination. Throws PreconditionError when A is singular.
 */
RatMatrix solve_square(const RatMatrix& a, const RatMatrix& b);

/// Non-negative gcd of all entries; zero for an all-zero (or empty) input.
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& m)
{
    Integer g = 0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            g = gcd(g, Integer(m(i, j)));
    return abs(g);
}

/// (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
struct ExtendedGcd
{
    Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/**
 * gcd of all i x i minors of an n x i matrix with independent columns.
 *
 * Row subsets are visited lexicographically and the scan stops as soon as
 * the running gcd reaches 1. Throws PreconditionError("dependent columns")
 * if the columns are not linearly independent.
 */
Integer gcd_of_minors(const IntMatrix& m);

struct HermiteForm
{
    IntMatrix h;                ///< column Hermite form, h = m * u
    IntMatrix u;                ///< unimodular transform
    Index rank = 0;             ///< number of nonzero (leading) columns of h
    std::vector<Index> pivot_rows;  ///< pivot row of each of the first `rank` columns
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/**
 * A basis of a sublattice of Z^n, stored as the columns of an n x k matrix.
 *
 * The columns are linearly independent over the rationals; k = 0 is a
 * valid (zero-dimensional) basis.
 */
class LatticeBasis
{
    public:
        LatticeBasis(Index ambient_dim, IntMatrix columns);

        /// Zero-dimensional basis in Z^n.
        static LatticeBasis empty(Index ambient_dim);
        static LatticeBasis standard(Index ambient_dim);

        Index ambient_dim() const { return ambient_dim_; }
        Index rank() const { return basis_.cols(); }
        const IntMatrix& matrix() const { return basis_; }
        IntVector vector(Index j) const { return basis_.col(j); }

    private:
        Index ambient_dim_;
        IntMatrix basis_;
};

/// Basis of the integer kernel {x in Z^q : A x = 0} of a p x q matrix, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis of span(columns) ∩ Z^n, in column Hermite form. Dependent input is fine.
LatticeBasis saturate(const IntMatrix& columns);
LatticeBasis saturate(const std::vector<IntVector>& vectors, Index ambient_dim);

/**
 * Index of the lattice generated by the (independent) columns of `v`
 * inside its saturation, computed from an explicit basis change
 * V = S D as |det D|. Equals gcd_of_minors(v).
 */
Integer sublattice_index(const IntMatrix& v);

struct LatticeDeterminant
{
    Integer gram;                 ///< det(B^T B), always an integer
    std::optional<Integer> det;   ///< sqrt(gram) when it is an integer
};

LatticeDeterminant lattice_determinant(const LatticeBasis& basis);

/// Integer points of an affine subspace: base + (integer span of directions).
struct AffineLattice
{
    IntVector base;
    LatticeBasis directions;
};

/// All integer solutions of A x = b, or nullopt when there are none.
std::optional<AffineLattice> solve_affine_lattice(const IntMatrix& a, const IntVector& b);

/**
 * Coefficients of the unique polynomial of degree <= d through d + 1
 * points with distinct abscissae. Throws on repeated abscissae or a point
 * count different from d + 1.
 */
Polynomial interpolate_polynomial(const std::vector<std::pair<Integer, Rational>>& points, Index degree);

Rational evaluate(const Polynomial& p, const Rational& x);

}  // namespace latpoly
