#pragma once

// Independent reference implementations used as test oracles. None of
// these call into the LP or elimination code of the library.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "latpoly/polytope.hpp"
#include "latpoly/types.hpp"

namespace oracle {

using namespace latpoly;

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    return (m.array() == Scalar(0)).all();
}

/// Laplace expansion; fine for the small matrices used in tests.
template <typename Scalar>
Scalar cofactor_det(const Matrix<Scalar>& m)
{
    const Index n = m.rows();
    if (n == 0)
        return Scalar(1);
    if (n == 1)
        return m(0, 0);
    Scalar total = 0;
    for (Index j = 0; j < n; ++j)
    {
        if (m(0, j) == 0)
            continue;
        Matrix<Scalar> minor(n - 1, n - 1);
        for (Index r = 1; r < n; ++r)
            for (Index c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        Scalar term = m(0, j) * cofactor_det(minor);
        total += j % 2 == 0 ? term : Scalar(-term);
    }
    return total;
}

/// Largest k with a nonzero k x k minor.
template <typename Scalar>
Index minor_rank(const Matrix<Scalar>& m)
{
    for (Index k = std::min(m.rows(), m.cols()); k > 0; --k)
        for (const auto& rows : combinations(m.rows(), k))
            for (const auto& cols : combinations(m.cols(), k))
            {
                Matrix<Scalar> sub(k, k);
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j)
                        sub(i, j) = m(rows[i], cols[j]);
                if (cofactor_det(sub) != 0)
                    return k;
            }
    return 0;
}

/// Determinantal divisors d_1, ..., d_r (gcd of all k x k minors).
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m)
{
    std::vector<Integer> out;
    for (Index k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    {
        Integer g = 0;
        for (const auto& rows : combinations(m.rows(), k))
            for (const auto& cols : combinations(m.cols(), k))
            {
                IntMatrix sub(k, k);
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j)
                        sub(i, j) = m(rows[i], cols[j]);
                g = gcd(g, cofactor_det(sub));
            }
        if (g == 0)
            break;
        out.push_back(abs(g));
    }
    return out;
}

/**
 * Facet description {x : a_f . x <= b_f} of a full-dimensional polytope,
 * found by testing the hyperplane through every n-subset of points.
 */
struct Facets
{
    std::vector<RatVector> normals;
    std::vector<Rational> offsets;

    explicit Facets(const VPolytope& p)
    {
        const Index n = p.ambient_dim();
        for (const auto& subset : combinations(p.point_count(), n))
        {
            RatMatrix d(n, n - 1);
            for (Index j = 1; j < n; ++j)
                d.col(j - 1) = p.point(subset[j]) - p.point(subset[0]);
            RatVector a(n);
            for (Index i = 0; i < n; ++i)
            {
                RatMatrix minor(n - 1, n - 1);
                for (Index r = 0, rr = 0; r < n; ++r)
                    if (r != i)
                        minor.row(rr++) = d.row(r);
                Rational c = cofactor_det(minor);
                a(i) = i % 2 == 0 ? c : Rational(-c);
            }
            if ((a.array() == Rational(0)).all())
                continue;
            Rational b = a.dot(p.point(subset[0]));
            bool below = true, above = true;
            for (Index j = 0; j < p.point_count(); ++j)
            {
                Rational v = a.dot(p.point(j));
                below = below && v <= b;
                above = above && v >= b;
            }
            if (below)
            {
                normals.push_back(a);
                offsets.push_back(b);
            }
            if (above)
            {
                normals.push_back(-a);
                offsets.push_back(-b);
            }
        }
    }

    bool contains(const RatVector& x) const
    {
        for (std::size_t f = 0; f < normals.size(); ++f)
            if (normals[f].dot(x) > offsets[f])
                return false;
        return true;
    }

    /// Gauge of x for a body containing the origin in its interior.
    Rational gauge(const RatVector& x) const
    {
        Rational g = 0;
        for (std::size_t f = 0; f < normals.size(); ++f)
            g = std::max(g, Rational(normals[f].dot(x) / offsets[f]));
        return g;
    }
};

inline IntVector lower_corner(const VPolytope& p)
{
    IntVector lo(p.ambient_dim());
    for (Index i = 0; i < p.ambient_dim(); ++i)
        lo(i) = floor_of(p.points().row(i).minCoeff());
    return lo;
}

inline IntVector upper_corner(const VPolytope& p)
{
    IntVector hi(p.ambient_dim());
    for (Index i = 0; i < p.ambient_dim(); ++i)
        hi(i) = ceil_of(p.points().row(i).maxCoeff());
    return hi;
}

/// Calls f on every integer point of the box [lo, hi].
template <typename F>
void for_each_in_box(const IntVector& lo, const IntVector& hi, F&& f)
{
    const Index n = lo.size();
    for (Index i = 0; i < n; ++i)
        if (lo(i) > hi(i))
            return;
    IntVector z = lo;
    for (;;)
    {
        f(z);
        Index i = 0;
        while (i < n && z(i) == hi(i))
        {
            z(i) = lo(i);
            ++i;
        }
        if (i == n)
            return;
        ++z(i);
    }
}

/// #(P ∩ Z^n) by scanning the bounding box against the facet description.
inline Integer count_points(const VPolytope& p)
{
    Facets facets(p);
    Integer count = 0;
    for_each_in_box(lower_corner(p), upper_corner(p), [&](const IntVector& z) {
        if (facets.contains(to_rational(z)))
            ++count;
    });
    return count;
}

/**
 * Successive minima of a 0-symmetric full-dimensional body straight from
 * the definition: lambda_j is the least gauge value t such that the lattice
 * points of gauge <= t span a space of dimension >= j. The unit vectors
 * bound lambda_n, so scaling the bounding box by their largest gauge
 * covers every relevant point.
 */
inline std::vector<Rational> minima(const VPolytope& p)
{
    Facets facets(p);
    const Index n = p.ambient_dim();
    Rational largest = 0;
    for (Index i = 0; i < n; ++i)
    {
        RatVector e = RatVector::Zero(n);
        e(i) = 1;
        largest = std::max(largest, facets.gauge(e));
    }
    const Integer radius = ceil_of(largest);
    std::vector<std::pair<Rational, IntVector>> points;
    for_each_in_box(IntVector(lower_corner(p) * radius), IntVector(upper_corner(p) * radius), [&](const IntVector& z) {
        if ((z.array() != Integer(0)).any())
            points.emplace_back(facets.gauge(to_rational(z)), z);
    });
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rational> out;
    IntMatrix span(n, 0);
    std::size_t k = 0;
    while (k < points.size() && static_cast<Index>(out.size()) < n)
    {
        const Rational level = points[k].first;
        while (k < points.size() && points[k].first == level)
        {
            IntMatrix next(n, span.cols() + 1);
            next << span, points[k].second;
            if (minor_rank(next) == next.cols())
                span = next;
            ++k;
        }
        while (static_cast<Index>(out.size()) < span.cols())
            out.push_back(level);
    }
    return out;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMatrix random_matrix(Index rows, Index cols, long lo, long hi)
{
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = uniform(lo, hi);
    return m;
}

/// Random full-rank n x n integer matrix.
inline IntMatrix random_basis(Index n, long bound)
{
    for (;;)
    {
        IntMatrix m = random_matrix(n, n, -bound, bound);
        if (cofactor_det(m) != 0)
            return m;
    }
}

/// Random full-dimensional lattice polytope from `count` points.
inline VPolytope random_lattice_polytope(Index n, Index count, long bound)
{
    for (;;)
    {
        IntMatrix pts = random_matrix(n, count, -bound, bound);
        RatMatrix d(n, count - 1);
        for (Index j = 1; j < count; ++j)
            d.col(j - 1) = to_rational(IntVector(pts.col(j) - pts.col(0)));
        if (minor_rank(d) == n)
            return VPolytope::from_integer(pts);
    }
}

/// conv(±points) for `count` random points, full-dimensional.
inline VPolytope random_symmetric_polytope(Index n, Index count, long bound)
{
    for (;;)
    {
        IntMatrix pts = random_matrix(n, count, -bound, bound);
        if (minor_rank(to_rational(pts)) != n)
            continue;
        IntMatrix both(n, 2 * count);
        both << pts, -pts;
        return VPolytope::from_integer(both);
    }
}

}  // namespace oracle
