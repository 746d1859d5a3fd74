#pragma once

#include "latpoly/types.hpp"

namespace latpoly {

/**
 * A polytope given as the convex hull of finitely many rational points.
 *
 * Points are stored as the columns of an n x V matrix. Redundant points
 * (duplicates, interior points) are tolerated: the body is always the
 * convex hull of the stored set, and no operation assumes the stored
 * points are the true vertices.
 */
class VPolytope
{
    public:
        explicit VPolytope(RatMatrix points);
        static VPolytope from_integer(const IntMatrix& points);
        /// Convenience for tests and literals: one inner list per point.
        static VPolytope from_rows(const std::vector<std::vector<Rational>>& points);

        Index ambient_dim() const { return points_.rows(); }
        Index point_count() const { return points_.cols(); }
        const RatMatrix& points() const { return points_; }
        RatVector point(Index j) const { return points_.col(j); }

        bool is_lattice() const { return is_integral(points_); }

    private:
        RatMatrix points_;
};

}  // namespace latpoly
