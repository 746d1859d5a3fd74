#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latpoly/types.hpp"
#include "latpoly/vpolytope.hpp"

/**
 * Exact rational linear programming and the convex-body queries built on it.
 *
 * The solver is a dense two-phase tableau simplex over GMP rationals using
 * Bland's rule (lowest index enters, lowest basic index leaves on ties), so
 * it cannot cycle and every run is deterministic.
 */
namespace latpoly {

enum class Sense { less_equal, equal, greater_equal };

/// maximize objective . x  s.t.  constraints x (senses) rhs,  x >= 0 unless free.
struct LpProblem
{
    RatVector objective;
    RatMatrix constraints;
    std::vector<Sense> senses;
    RatVector rhs;
    /// Per-variable flag; an empty vector means every variable is nonnegative.
    std::vector<bool> free_variable;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome
{
    LpStatus status = LpStatus::infeasible;
    Rational value;
    RatVector point;   ///< empty unless status == optimal
};

LpOutcome lp_solve(const LpProblem& problem);

/// True iff `x` satisfies every constraint and sign restriction of `problem` exactly.
bool satisfies(const LpProblem& problem, const RatVector& x);

/**
 * The Minkowski sum of the convex hulls of consecutive blocks of columns,
 *
 *     { G w : w >= 0, the entries of w in each block sum to one }.
 *
 * A single block is a V-polytope; two blocks V and -V give the difference
 * body; blocks {0, v_i} or {-v_i, v_i} give a zonotope or its difference
 * body without listing 2^m vertices.
 */
class HullSum
{
    public:
        HullSum(RatMatrix generators, std::vector<Index> block_sizes);
        static HullSum hull(const RatMatrix& points);
        static HullSum hull(const VPolytope& p) { return hull(p.points()); }

        Index ambient_dim() const { return generators_.rows(); }
        const RatMatrix& generators() const { return generators_; }
        const std::vector<Index>& block_sizes() const { return blocks_; }

        HullSum scaled(const Rational& factor) const;

        /// Dimension of the affine hull.
        Index dimension() const;
        /// max of dir . x over the body, in closed form.
        Rational support(const RatVector& dir) const;
        bool contains(const RatVector& x) const;

        /**
         * Range of coordinate `coord` over the slice of the body where the
         * coordinates listed in `fixed` take the given values; nullopt when
         * the slice is empty.
         */
        std::optional<std::pair<Rational, Rational>>
        coordinate_range(Index coord, const std::vector<std::pair<Index, Rational>>& fixed) const;

        /**
         * max { mu >= 0 : mu z in body }, or nullopt when mu is unbounded.
         * For a body containing the origin, 1 / mu is the gauge of z.
         */
        std::optional<Rational> max_scaling(const RatVector& z) const;

    private:
        RatMatrix generators_;
        std::vector<Index> blocks_;
};

/**
 * Visits every integer point of the body. Coordinates are scanned
 * narrowest-first; the range of each coordinate given the outer ones is
 * found by LP, so only nonempty fibers are visited. Throws LimitExceeded
 * if the integer bounding box holds more than limits.max_box points.
 */
void for_each_lattice_point(const HullSum& body, const EnumerationLimits& limits,
                            const std::function<void(const IntVector&)>& visit);

/// Number of integer points in the body (same scan, fibers counted in bulk).
Integer count_lattice_points(const HullSum& body, const EnumerationLimits& limits = {});

/// Integer bounding box [lo, hi] per coordinate; lo > hi somewhere means no points.
std::pair<IntVector, IntVector> integer_box(const HullSum& body);

bool membership(const VPolytope& p, const RatVector& x);
Rational support_bound(const VPolytope& p, const IntVector& direction);

/**
 * Gauge (Minkowski functional) of a full-dimensional 0-symmetric body.
 *
 * Either a symmetric vertex list is used directly, or the difference body
 * P - P of an arbitrary full-dimensional polytope is represented implicitly
 * by two convex-combination blocks. gauge(z) = min { lambda : z in lambda K }.
 */
class GaugeBody
{
    public:
        /// Validates that conv(points) is 0-symmetric and full-dimensional.
        static GaugeBody symmetric(const VPolytope& p);
        /// The difference body P - P; P must be full-dimensional.
        static GaugeBody difference(const VPolytope& p);
        /// Caller guarantees 0-symmetry; full dimension is validated.
        static GaugeBody from_symmetric_body(HullSum body);

        Index ambient_dim() const { return body_.ambient_dim(); }
        const HullSum& body() const { return body_; }

        Rational gauge(const IntVector& z) const;
        Rational gauge(const RatVector& z) const;
        Rational support(const RatVector& dir) const { return body_.support(dir); }
        bool contains(const RatVector& x) const { return body_.contains(x); }
        GaugeBody scaled(const Rational& factor) const;

    private:
        explicit GaugeBody(HullSum body) : body_(std::move(body)) {}
        HullSum body_;
};

/// Gauge of z in a symmetric vertex list or in P - P; see GaugeBody.
Rational gauge(const GaugeBody& body, const IntVector& z);

}  // namespace latpoly
