#pragma once

#include "latpoly/lp.hpp"
#include "latpoly/types.hpp"
#include "latpoly/vpolytope.hpp"

namespace latpoly {

/// Ehrhart polynomial k -> #(kP ∩ Z^n), coefficients g_0 .. g_n.
struct EhrhartPoly
{
    Polynomial coefficients;

    Index degree() const { return static_cast<Index>(coefficients.size()) - 1; }
    const Rational& operator[](Index i) const { return coefficients[static_cast<std::size_t>(i)]; }
    const Rational& leading() const { return coefficients.back(); }
    Rational evaluate(const Integer& k) const;

    friend bool operator==(const EhrhartPoly&, const EhrhartPoly&) = default;
};

/// Dimension of the affine hull of the stored points.
Index affine_dim(const VPolytope& p);

Integer count_lattice_points(const VPolytope& p, const EnumerationLimits& limits = {});

/// Points scaled by k >= 1.
VPolytope dilate(const VPolytope& p, const Integer& k);

/**
 * Ehrhart polynomial of a full-dimensional lattice polytope, interpolated
 * from the counts G(kP) at k = 0, ..., n. Throws PreconditionError
 * ("not a lattice polytope", or lower-dimensional input).
 */
EhrhartPoly ehrhart(const VPolytope& p, const EnumerationLimits& limits = {});

/// Volume of a full-dimensional lattice polytope (leading Ehrhart coefficient).
Rational volume(const VPolytope& p, const EnumerationLimits& limits = {});

/// Keeps the first `keep` coordinates of every point (redundant points kept).
VPolytope project(const VPolytope& p, Index keep);

/// conv(P, -P): the points of P together with their negatives.
VPolytope symmetrize(const VPolytope& p);

/// Gauge oracle of P - P; throws for lower-dimensional P.
GaugeBody difference_gauge_view(const VPolytope& p);

/// The true vertices of conv(P), duplicates and non-vertices removed, original order.
VPolytope hull_vertices(const VPolytope& p);

/// conv(P) == conv(Q), decided by mutual membership.
bool same_body(const VPolytope& p, const VPolytope& q);

/// True when conv(P) = -conv(P).
bool is_symmetric(const VPolytope& p);

}  // namespace latpoly
