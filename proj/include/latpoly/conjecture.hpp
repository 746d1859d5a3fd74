#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpoly/minima.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/sigma.hpp"
#include "latpoly/zonotope.hpp"

/**
 * Coefficient bounds in terms of the successive minima of the difference
 * body, and the Q^n_l family on which g_i <= sigma_i fails.
 *
 * Throughout, sigma_i(P) means sigma_i(1/lambda_1(DP), ..., 1/lambda_n(DP)).
 * Measuring against the half difference body instead would only double
 * every minimum, since lambda_j(DP / 2) = 2 lambda_j(DP).
 */
namespace latpoly {

/// 1/lambda_j(DP) for j = 1..n, nondecreasing in lambda. P full-dimensional.
std::vector<Rational> reciprocal_difference_minima(const VPolytope& p, const EnumerationLimits& limits = {});
std::vector<Rational> reciprocal_difference_minima(const Zonotope& z, const EnumerationLimits& limits = {});

Rational sigma_of_polytope(const VPolytope& p, Index i, const EnumerationLimits& limits = {});
Rational sigma_of_polytope(const Zonotope& z, Index i, const EnumerationLimits& limits = {});

/// prod_j (x_j k + 1) as a polynomial in k.
Polynomial l_polynomial(const std::vector<Rational>& reciprocals);

struct FloorBound
{
    Integer bound;   ///< prod floor(1/lambda_j(DP) + 1)
    Integer count;   ///< G(P)
    bool holds;
};

FloorBound conjecture_floor_bound(const VPolytope& p, const EnumerationLimits& limits = {});

/// L(P) = prod (1/lambda_j(DP) + 1).
Rational l_bound(const VPolytope& p, const EnumerationLimits& limits = {});

struct BoundRecord
{
    Index i;
    std::string name;
    Rational g;       ///< g_i, or g_i^2 for squared records
    Rational bound;
    bool holds;
};

struct BoundReport
{
    EhrhartPoly ehrhart;
    MinimaResult difference_minima;
    std::vector<Rational> sigmas;   ///< sigma_0 .. sigma_n
    std::vector<BoundRecord> records;
    bool sigma_holds = true;        ///< every "sigma" record holds
    FloorBound floor;
    Rational l_value;
    bool l_holds = false;           ///< G(P) <= L(P)
};

/// g_i against sigma_i(P), plus the floor-product and L(P) verdicts.
BoundReport coefficient_report(const VPolytope& p, const EnumerationLimits& limits = {});

/**
 * As above for a full-dimensional zonotope, with g_i from the subset sum
 * formula, plus the zonotope bounds (n!/i!) sigma_i, the squared form of
 * C(n,i) (n-i)^((n-i)/2) sigma_i, and (C(m,i)/C(n,i)) sigma_i when the
 * generators are in general position.
 */
BoundReport coefficient_report(const Zonotope& z, const EnumerationLimits& limits = {});

struct PrimitiveGeneratorReport
{
    Index m;
    Rational g1;
    Rational sigma1;
    bool holds;
};

/// m <= sigma_1(Z) for primitive generators in general position.
PrimitiveGeneratorReport check_corollary_primitive(const Zonotope& z, const EnumerationLimits& limits = {});

bool is_prime_power(long k);

/// n(k-1)+1 for prime power k; PreconditionError("formula unproven") otherwise.
Integer davenport_prime_power(long n, long k);

/**
 * Davenport constant of (Z_k)^n by exhaustive search for the longest
 * zero-sum-free sequence. Group order is capped at 64.
 */
Integer davenport_constant(long n, long k);

struct DavenportReport
{
    Index m;
    Rational lambda1;
    Rational bound;   ///< n / lambda_1(DZ)
    bool holds;
};

/// m <= n / lambda_1(DZ) for m primitive generators with n(k-1)+1 <= m <= kn.
DavenportReport check_davenport_prop(const Zonotope& z, long k, const EnumerationLimits& limits = {});

struct QFamilyInstance
{
    long n;
    long l;
    VPolytope polytope;
};

/// conv{l [-1,1]^(n-1) x {0}, +-e_n}: 2^(n-1) + 2 points.
QFamilyInstance q_family(long n, long l);

/// Bernoulli numbers with B_1 = +1/2.
Rational bernoulli(long m);

/**
 * Coefficient of k^i in sum_{x=0}^{k-1} x^j, for 0 <= i <= j+1. For
 * i >= 1 this is sum_{t=i}^{j+1} (-1)^(t-i) C(j+1,t) C(t,i) B_(j+1-t) / (j+1);
 * the constant coefficient is 0.
 */
Rational p_coeff(long i, long j);

/// sum_{x=0}^{k-1} x^i as a polynomial in k (0^0 = 1).
Polynomial faulhaber_sum(long i);

EhrhartPoly q_family_ehrhart_closed(long n, long l);

/// sigma_i(Q^n_l) = C(n-1,i)(2l)^i + 2 C(n-1,i-1)(2l)^(i-1).
Rational q_family_sigma_closed(long n, long l, long i);

/**
 * Smallest l <= l_max with g_i(Q^n_l) > c sigma_i(Q^n_l), from the closed
 * forms. Requires i = n-2 (n >= 3) or i = n-3 (n >= 4), and c > 0.
 */
std::optional<long> find_violation(long n, long i, const Rational& c, long l_max);

}  // namespace latpoly
