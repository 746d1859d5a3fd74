#pragma once

#include <optional>
#include <vector>

#include "latpoly/minima.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

enum class LatticeFaceFailure { none, no_integer_point, projection_not_onto, base_point_nonintegral };

const char* to_string(LatticeFaceFailure kind);

/**
 * Outcome of the lattice-face test. When the test fails, `failing_subset`
 * lists positions in `vertices` (the pruned hull vertices) of the first
 * offending subset in (dimension, lexicographic) order.
 */
struct LatticeFaceReport
{
    explicit LatticeFaceReport(VPolytope v) : vertices(std::move(v)) {}

    bool is_lattice_face = false;
    VPolytope vertices;
    std::vector<Index> failing_subset;
    Index failing_dim = -1;
    LatticeFaceFailure failure_kind = LatticeFaceFailure::none;
    Index subsets_checked = 0;
};

struct LatticeFaceOptions
{
    Index vertex_cap = 12;
    Index max_ambient_dim = 4;
    /// Check every vertex subset rather than only affinely independent ones.
    bool exhaustive = false;
};

/**
 * For every set U of hull vertices spanning a k-dimensional affine space,
 * 0 <= k <= n-1, checks that aff(U) ∩ Z^n projects onto Z^k under the map
 * keeping the first k coordinates. By default only affinely independent
 * U are visited; every spanning set has the affine hull of one of them.
 */
LatticeFaceReport check_lattice_face(const VPolytope& p, const LatticeFaceOptions& options = {});

struct LiuRow
{
    Index i;
    Rational coefficient;          ///< g_i(P)
    Rational projected_volume;     ///< vol_i of P projected to the first i coordinates; vol_0 := 1
    bool equal;
};

/// g_i(P) against vol_i(projection) for a full-dimensional lattice-face P.
std::vector<LiuRow> verify_liu(const VPolytope& p, const EnumerationLimits& limits = {});

struct ProjectionMinimaRow
{
    Index i;   ///< projection keeps the first i coordinates
    Index j;   ///< minimum index, 1 <= j <= i
    Rational projected;   ///< lambda_j(projection, Z^i)
    Rational original;    ///< lambda_j(P)
    bool holds;
};

struct ProjectionMinimaReport
{
    bool lattice_face = false;
    std::vector<ProjectionMinimaRow> rows;
    bool all_hold = false;
};

/**
 * lambda_j(projection to the first i coordinates) >= lambda_j(P) for all
 * 1 <= j <= i <= n. P must be 0-symmetric and full-dimensional; the
 * inequality is only guaranteed for lattice-face P, and the report carries
 * that flag so counterexamples can be exhibited.
 */
ProjectionMinimaReport check_projection_minima(const VPolytope& p, const EnumerationLimits& limits = {});

struct TheoremRow
{
    Index i;
    Rational coefficient;   ///< g_i(P)
    Rational bound;
    bool holds;
};

struct LatticeFaceTheoremReport
{
    bool lattice_face = false;
    std::optional<std::vector<TheoremRow>> symmetric_part;    ///< g_i <= sigma_i(2/lambda_j(P))
    std::optional<std::vector<TheoremRow>> zero_vertex_part;  ///< g_i <= sigma_i(2/lambda_j(SP))
};

/// Both coefficient bounds for lattice-face polytopes; needs P symmetric or 0 a vertex.
LatticeFaceTheoremReport check_latface_theorem(const VPolytope& p, const EnumerationLimits& limits = {});

}  // namespace latpoly
