#include "latpoly/polytope.hpp"

#include "latpoly/linalg.hpp"

namespace latpoly {

VPolytope::VPolytope(RatMatrix points) : points_(std::move(points))
{
    if (points_.cols() == 0)
        throw PreconditionError("polytope: empty point set");
    if (points_.rows() == 0)
        throw PreconditionError("polytope: ambient dimension must be positive");
}

VPolytope VPolytope::from_integer(const IntMatrix& points)
{
    return VPolytope(to_rational(points));
}

VPolytope VPolytope::from_rows(const std::vector<std::vector<Rational>>& points)
{
    if (points.empty())
        throw PreconditionError("polytope: empty point set");
    const Index n = static_cast<Index>(points.front().size());
    RatMatrix m(n, static_cast<Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j)
    {
        if (static_cast<Index>(points[j].size()) != n)
            throw PreconditionError("polytope: points of different dimension");
        for (Index i = 0; i < n; ++i)
            m(i, static_cast<Index>(j)) = points[j][static_cast<std::size_t>(i)];
    }
    return VPolytope(std::move(m));
}

Rational EhrhartPoly::evaluate(const Integer& k) const
{
    return latpoly::evaluate(coefficients, Rational(k));
}

Index affine_dim(const VPolytope& p)
{
    return HullSum::hull(p).dimension();
}

Integer count_lattice_points(const VPolytope& p, const EnumerationLimits& limits)
{
    return count_lattice_points(HullSum::hull(p), limits);
}

VPolytope dilate(const VPolytope& p, const Integer& k)
{
    if (k < 1)
        throw PreconditionError("dilate: factor must be a positive integer");
    RatMatrix m = p.points();
    const Rational f(k);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) *= f;
    return VPolytope(std::move(m));
}

EhrhartPoly ehrhart(const VPolytope& p, const EnumerationLimits& limits)
{
    if (!p.is_lattice())
        throw PreconditionError("not a lattice polytope");
    const Index n = p.ambient_dim();
    if (affine_dim(p) != n)
        throw PreconditionError("ehrhart: polytope is not full-dimensional");

    // G(0 P) = #{0} = 1.
    std::vector<std::pair<Integer, Rational>> samples{{Integer(0), Rational(1)}};
    for (Index k = 1; k <= n; ++k)
        samples.emplace_back(Integer(k), Rational(count_lattice_points(dilate(p, k), limits)));
    EhrhartPoly out{interpolate_polynomial(samples, n)};
    if (out[0] != 1)
        throw std::logic_error("ehrhart: constant coefficient is not 1");
    return out;
}

Rational volume(const VPolytope& p, const EnumerationLimits& limits)
{
    return ehrhart(p, limits).leading();
}

VPolytope project(const VPolytope& p, Index keep)
{
    if (keep < 1 || keep > p.ambient_dim())
        throw PreconditionError("project: kept dimension out of range");
    return VPolytope(p.points().topRows(keep));
}

VPolytope symmetrize(const VPolytope& p)
{
    const Index v = p.point_count();
    RatMatrix m(p.ambient_dim(), 2 * v);
    m << p.points(), -p.points();
    return VPolytope(std::move(m));
}

GaugeBody difference_gauge_view(const VPolytope& p)
{
    return GaugeBody::difference(p);
}

VPolytope hull_vertices(const VPolytope& p)
{
    const RatMatrix& pts = p.points();
    std::vector<Index> distinct;
    for (Index j = 0; j < pts.cols(); ++j)
    {
        bool seen = false;
        for (Index k : distinct)
            seen = seen || pts.col(k) == pts.col(j);
        if (!seen)
            distinct.push_back(j);
    }
    if (distinct.size() == 1)
        return VPolytope(pts.col(distinct.front()));

    std::vector<Index> keep;
    for (Index j : distinct)
    {
        RatMatrix others(pts.rows(), static_cast<Index>(distinct.size()) - 1);
        Index c = 0;
        for (Index k : distinct)
            if (k != j)
                others.col(c++) = pts.col(k);
        if (!HullSum::hull(others).contains(pts.col(j)))
            keep.push_back(j);
    }
    RatMatrix out(pts.rows(), static_cast<Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
        out.col(static_cast<Index>(c)) = pts.col(keep[c]);
    return VPolytope(std::move(out));
}

bool same_body(const VPolytope& p, const VPolytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        return false;
    for (Index j = 0; j < p.point_count(); ++j)
        if (!membership(q, p.point(j)))
            return false;
    for (Index j = 0; j < q.point_count(); ++j)
        if (!membership(p, q.point(j)))
            return false;
    return true;
}

bool is_symmetric(const VPolytope& p)
{
    for (Index j = 0; j < p.point_count(); ++j)
        if (!membership(p, RatVector(-p.point(j))))
            return false;
    return true;
}

}  // namespace latpoly
