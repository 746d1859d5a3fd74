#include "latpoly/lattice_face.hpp"

#include <numeric>

#include "latpoly/linalg.hpp"
#include "latpoly/sigma.hpp"

namespace latpoly {

const char* to_string(LatticeFaceFailure kind)
{
    switch (kind)
    {
        case LatticeFaceFailure::none: return "none";
        case LatticeFaceFailure::no_integer_point: return "no-integer-point";
        case LatticeFaceFailure::projection_not_onto: return "projection-not-onto";
        case LatticeFaceFailure::base_point_nonintegral: return "base-point-nonintegral";
    }
    return "unknown";
}

namespace {

// Differences u_j - u_0 as columns, each scaled to an integer vector.
IntMatrix integer_directions(const VPolytope& v, const std::vector<Index>& subset)
{
    const Index n = v.ambient_dim();
    IntMatrix d(n, static_cast<Index>(subset.size()) - 1);
    for (std::size_t j = 1; j < subset.size(); ++j)
    {
        RatVector diff = v.point(subset[j]) - v.point(subset[0]);
        Integer scale = 1;
        for (Index i = 0; i < n; ++i)
            scale = boost::multiprecision::lcm(scale, Integer(denominator(diff(i))));
        d.col(static_cast<Index>(j) - 1) = to_integer(RatVector(diff * Rational(scale)));
    }
    return d;
}

// Checks one affine hull; `dim` receives its dimension. Hulls of dimension n pass.
LatticeFaceFailure check_hull(const VPolytope& v, const std::vector<Index>& subset, Index& dim)
{
    const Index n = v.ambient_dim();
    const RatVector base = v.point(subset[0]);
    if (subset.size() == 1)
    {
        dim = 0;
        return is_integral(base) ? LatticeFaceFailure::none : LatticeFaceFailure::base_point_nonintegral;
    }
    IntMatrix d = integer_directions(v, subset);
    dim = rank(d);
    if (dim == n)
        return LatticeFaceFailure::none;
    if (dim == 0)
        return is_integral(base) ? LatticeFaceFailure::none : LatticeFaceFailure::base_point_nonintegral;

    // aff(U) = {x : N^T x = N^T u_0} with N spanning the integer normals.
    IntMatrix normals = integer_kernel(IntMatrix(d.transpose()));
    IntMatrix a = normals.transpose();
    RatVector rhs = to_rational(a) * base;
    if (!is_integral(rhs))
        return LatticeFaceFailure::no_integer_point;
    auto solutions = solve_affine_lattice(a, to_integer(rhs));
    if (!solutions)
        return LatticeFaceFailure::no_integer_point;
    const IntMatrix& w = solutions->directions.matrix();
    if (w.cols() != dim)
        throw std::logic_error("lattice-face: affine lattice has the wrong rank");
    if (abs(determinant(IntMatrix(w.topRows(dim)))) != 1)
        return LatticeFaceFailure::projection_not_onto;
    return LatticeFaceFailure::none;
}

bool affinely_independent(const VPolytope& v, const std::vector<Index>& subset)
{
    if (subset.size() <= 1)
        return true;
    RatMatrix d(v.ambient_dim(), static_cast<Index>(subset.size()) - 1);
    for (std::size_t j = 1; j < subset.size(); ++j)
        d.col(static_cast<Index>(j) - 1) = v.point(subset[j]) - v.point(subset[0]);
    return rank(d) == d.cols();
}

}  // namespace

LatticeFaceReport check_lattice_face(const VPolytope& p, const LatticeFaceOptions& options)
{
    const Index n = p.ambient_dim();
    if (n > options.max_ambient_dim)
        throw LimitExceeded("lattice-face: dimension " + std::to_string(n) + " exceeds " +
                            std::to_string(options.max_ambient_dim));
    LatticeFaceReport report(hull_vertices(p));
    const Index m = report.vertices.point_count();
    if (m > options.vertex_cap)
        throw LimitExceeded("lattice-face: " + std::to_string(m) + " vertices exceed the cap of " +
                            std::to_string(options.vertex_cap));

    auto fail = [&](const std::vector<Index>& subset, Index dim, LatticeFaceFailure kind) {
        report.is_lattice_face = false;
        report.failing_subset = subset;
        report.failing_dim = dim;
        report.failure_kind = kind;
        return report;
    };

    if (options.exhaustive)
    {
        // Every nonempty subset, ordered by size then lexicographically;
        // reports the first failure of smallest hull dimension.
        std::optional<LatticeFaceReport> first;
        for (Index size = 1; size <= m; ++size)
        {
            for (const auto& subset : combinations(m, size))
            {
                Index dim = 0;
                LatticeFaceFailure kind = check_hull(report.vertices, subset, dim);
                ++report.subsets_checked;
                if (kind != LatticeFaceFailure::none && (!first || dim < first->failing_dim))
                    first = fail(subset, dim, kind);
            }
        }
        if (first)
        {
            first->subsets_checked = report.subsets_checked;
            return *first;
        }
        report.is_lattice_face = true;
        return report;
    }

    for (Index k = 0; k < n && k < m; ++k)
    {
        for (const auto& subset : combinations(m, k + 1))
        {
            if (!affinely_independent(report.vertices, subset))
                continue;
            Index dim = 0;
            LatticeFaceFailure kind = check_hull(report.vertices, subset, dim);
            ++report.subsets_checked;
            if (kind != LatticeFaceFailure::none)
                return fail(subset, dim, kind);
        }
    }
    report.is_lattice_face = true;
    return report;
}

std::vector<LiuRow> verify_liu(const VPolytope& p, const EnumerationLimits& limits)
{
    const Index n = p.ambient_dim();
    if (!check_lattice_face(p).is_lattice_face)
        throw PreconditionError("not a lattice-face polytope");
    EhrhartPoly g = ehrhart(p, limits);
    std::vector<LiuRow> rows;
    for (Index i = 0; i <= n; ++i)
    {
        Rational vol = i == 0 ? Rational(1) : volume(project(p, i), limits);
        rows.push_back({i, g[i], vol, g[i] == vol});
    }
    return rows;
}

ProjectionMinimaReport check_projection_minima(const VPolytope& p, const EnumerationLimits& limits)
{
    const Index n = p.ambient_dim();
    if (affine_dim(p) != n)
        throw PreconditionError("projection minima: polytope is not full-dimensional");
    if (!is_symmetric(p))
        throw PreconditionError("projection minima: polytope is not 0-symmetric");

    ProjectionMinimaReport report;
    report.lattice_face = check_lattice_face(p).is_lattice_face;
    MinimaResult full = successive_minima(GaugeBody::symmetric(p), limits);
    report.all_hold = true;
    for (Index i = 1; i <= n; ++i)
    {
        MinimaResult proj = i == n ? full : successive_minima(GaugeBody::symmetric(project(p, i)), limits);
        for (Index j = 1; j <= i; ++j)
        {
            const Rational& a = proj.lambdas[static_cast<std::size_t>(j - 1)];
            const Rational& b = full.lambdas[static_cast<std::size_t>(j - 1)];
            report.rows.push_back({i, j, a, b, a >= b});
            report.all_hold = report.all_hold && a >= b;
        }
    }
    return report;
}

namespace {

std::vector<TheoremRow> coefficient_rows(const EhrhartPoly& g, const MinimaResult& minima)
{
    std::vector<Rational> x;
    for (const Rational& l : minima.lambdas)
        x.push_back(Rational(2) / l);
    std::vector<Rational> e = elementary_symmetric(x);
    std::vector<TheoremRow> rows;
    for (Index i = 1; i <= g.degree(); ++i)
    {
        const Rational& b = e[static_cast<std::size_t>(i)];
        rows.push_back({i, g[i], b, g[i] <= b});
    }
    return rows;
}

bool has_zero_vertex(const VPolytope& p)
{
    VPolytope v = hull_vertices(p);
    for (Index j = 0; j < v.point_count(); ++j)
        if ((v.point(j).array() == Rational(0)).all())
            return true;
    return false;
}

}  // namespace

LatticeFaceTheoremReport check_latface_theorem(const VPolytope& p, const EnumerationLimits& limits)
{
    const Index n = p.ambient_dim();
    if (affine_dim(p) != n)
        throw PreconditionError("lattice-face bound: polytope is not full-dimensional");
    const bool symmetric = is_symmetric(p);
    const bool zero_vertex = has_zero_vertex(p);
    if (!symmetric && !zero_vertex)
        throw PreconditionError("lattice-face bound: polytope is neither 0-symmetric nor has 0 as a vertex");

    LatticeFaceTheoremReport report;
    report.lattice_face = check_lattice_face(p).is_lattice_face;
    EhrhartPoly g = ehrhart(p, limits);
    if (symmetric)
        report.symmetric_part = coefficient_rows(g, successive_minima(GaugeBody::symmetric(p), limits));
    if (zero_vertex)
        report.zero_vertex_part =
            coefficient_rows(g, successive_minima(GaugeBody::symmetric(symmetrize(p)), limits));
    return report;
}

}  // namespace latpoly
