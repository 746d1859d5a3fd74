#include "latpoly/conjecture.hpp"

#include <functional>

namespace latpoly {

namespace {

std::vector<Rational> reciprocals(const MinimaResult& minima)
{
    std::vector<Rational> x;
    for (const Rational& l : minima.lambdas)
        x.push_back(Rational(1) / l);
    return x;
}

Rational power(const Rational& base, long e)
{
    Rational r = 1;
    for (long k = 0; k < e; ++k)
        r *= base;
    return r;
}

void require_full_dimensional(const Zonotope& z)
{
    if (z.dimension() != z.ambient_dim())
        throw PreconditionError("zonotope is not full-dimensional");
}

MinimaResult difference_minima(const VPolytope& p, const EnumerationLimits& limits)
{
    if (affine_dim(p) != p.ambient_dim())
        throw PreconditionError("polytope is not full-dimensional");
    return successive_minima(difference_gauge_view(p), limits);
}

MinimaResult difference_minima(const Zonotope& z, const EnumerationLimits& limits)
{
    require_full_dimensional(z);
    return successive_minima(z.difference_body(), limits);
}

Integer floor_product(const std::vector<Rational>& x)
{
    Integer b = 1;
    for (const Rational& v : x)
        b *= floor_of(v + 1);
    return b;
}

Rational plain_product(const std::vector<Rational>& x)
{
    Rational b = 1;
    for (const Rational& v : x)
        b *= v + 1;
    return b;
}

BoundReport base_report(EhrhartPoly g, MinimaResult minima)
{
    BoundReport r;
    r.ehrhart = std::move(g);
    r.difference_minima = std::move(minima);
    std::vector<Rational> x = reciprocals(r.difference_minima);
    r.sigmas = elementary_symmetric(x);
    for (Index i = 1; i <= r.ehrhart.degree(); ++i)
    {
        const Rational& s = r.sigmas[static_cast<std::size_t>(i)];
        bool ok = r.ehrhart[i] <= s;
        r.records.push_back({i, "sigma", r.ehrhart[i], s, ok});
        r.sigma_holds = r.sigma_holds && ok;
    }
    Integer count = numerator(r.ehrhart.evaluate(1));
    r.floor = {floor_product(x), count, count <= floor_product(x)};
    r.l_value = plain_product(x);
    r.l_holds = Rational(count) <= r.l_value;
    return r;
}

}  // namespace

std::vector<Rational> reciprocal_difference_minima(const VPolytope& p, const EnumerationLimits& limits)
{
    return reciprocals(difference_minima(p, limits));
}

std::vector<Rational> reciprocal_difference_minima(const Zonotope& z, const EnumerationLimits& limits)
{
    return reciprocals(difference_minima(z, limits));
}

Rational sigma_of_polytope(const VPolytope& p, Index i, const EnumerationLimits& limits)
{
    if (i < 0 || i > p.ambient_dim())
        throw PreconditionError("sigma: index exceeds the dimension");
    return sigma(reciprocal_difference_minima(p, limits), i);
}

Rational sigma_of_polytope(const Zonotope& z, Index i, const EnumerationLimits& limits)
{
    if (i < 0 || i > z.ambient_dim())
        throw PreconditionError("sigma: index exceeds the dimension");
    return sigma(reciprocal_difference_minima(z, limits), i);
}

Polynomial l_polynomial(const std::vector<Rational>& x)
{
    Polynomial p{Rational(1)};
    for (const Rational& v : x)
    {
        Polynomial next(p.size() + 1, Rational(0));
        for (std::size_t t = 0; t < p.size(); ++t)
        {
            next[t] += p[t];
            next[t + 1] += p[t] * v;
        }
        p = std::move(next);
    }
    return p;
}

FloorBound conjecture_floor_bound(const VPolytope& p, const EnumerationLimits& limits)
{
    Integer bound = floor_product(reciprocal_difference_minima(p, limits));
    Integer count = count_lattice_points(p, limits);
    return {bound, count, count <= bound};
}

Rational l_bound(const VPolytope& p, const EnumerationLimits& limits)
{
    return plain_product(reciprocal_difference_minima(p, limits));
}

BoundReport coefficient_report(const VPolytope& p, const EnumerationLimits& limits)
{
    EhrhartPoly g = ehrhart(p, limits);
    return base_report(std::move(g), difference_minima(p, limits));
}

BoundReport coefficient_report(const Zonotope& z, const EnumerationLimits& limits)
{
    require_full_dimensional(z);
    BoundReport r = base_report(ehrhart_stanley(z), difference_minima(z, limits));
    const long n = static_cast<long>(z.ambient_dim());
    const long m = static_cast<long>(z.generator_count());
    const bool general = m >= n && is_general_position(z);
    for (long i = 1; i <= n; ++i)
    {
        const Rational& g = r.ehrhart[i];
        const Rational& s = r.sigmas[static_cast<std::size_t>(i)];

        Rational fact = Rational(factorial(n)) / Rational(factorial(i)) * s;
        r.records.push_back({i, "factorial", g, fact, g <= fact});

        // C(n,i) (n-i)^((n-i)/2) sigma_i, squared on both sides.
        Rational c = Rational(binomial(n, i));
        Rational squared = c * c * power(Rational(n - i), n - i) * s * s;
        r.records.push_back({i, "binomial_power_squared", g * g, squared, g * g <= squared});

        if (general)
        {
            Rational gp = Rational(binomial(m, i)) / Rational(binomial(n, i)) * s;
            r.records.push_back({i, "general_position", g, gp, g <= gp});
        }
    }
    return r;
}

PrimitiveGeneratorReport check_corollary_primitive(const Zonotope& z, const EnumerationLimits& limits)
{
    require_full_dimensional(z);
    for (Index j = 0; j < z.generator_count(); ++j)
        if (!is_primitive(z.generator(j)))
            throw PreconditionError("primitive generators: generator " + std::to_string(j) + " is not primitive");
    if (!is_general_position(z))
        throw PreconditionError("primitive generators: generators are not in general position");
    PrimitiveGeneratorReport r;
    r.m = z.generator_count();
    r.g1 = ehrhart_stanley(z)[1];
    r.sigma1 = sigma_of_polytope(z, 1, limits);
    r.holds = Rational(r.m) <= r.sigma1;
    return r;
}

bool is_prime_power(long k)
{
    if (k < 2)
        return false;
    for (long p = 2; p * p <= k; ++p)
    {
        if (k % p == 0)
        {
            while (k % p == 0)
                k /= p;
            return k == 1;
        }
    }
    return true;
}

Integer davenport_prime_power(long n, long k)
{
    if (n < 1)
        throw PreconditionError("davenport: need n >= 1");
    if (!is_prime_power(k))
        throw PreconditionError("formula unproven");
    return Integer(n * (k - 1) + 1);
}

Integer davenport_constant(long n, long k)
{
    if (n < 1 || k < 2)
        throw PreconditionError("davenport: need n >= 1 and k >= 2");
    long order = 1;
    for (long i = 0; i < n; ++i)
    {
        order *= k;
        if (order > 64)
            throw LimitExceeded("davenport: group order exceeds 64");
    }
    auto add = [&](long a, long b) {
        long out = 0, place = 1;
        for (long i = 0; i < n; ++i)
        {
            out += ((a / place % k + b / place % k) % k) * place;
            place *= k;
        }
        return out;
    };

    // Longest zero-sum-free multiset, built in nondecreasing element order
    // while tracking the set of nonempty subsequence sums.
    long longest = 0;
    std::function<void(long, long, std::vector<bool>&)> extend = [&](long from, long length,
                                                                      std::vector<bool>& sums) {
        longest = std::max(longest, length);
        for (long a = from; a < order; ++a)
        {
            std::vector<bool> next = sums;
            next[static_cast<std::size_t>(a)] = true;
            for (long s = 0; s < order; ++s)
                if (sums[static_cast<std::size_t>(s)])
                    next[static_cast<std::size_t>(add(s, a))] = true;
            if (next[0])
                continue;
            extend(a, length + 1, next);
        }
    };
    std::vector<bool> none(static_cast<std::size_t>(order), false);
    extend(1, 0, none);
    return Integer(longest + 1);
}

DavenportReport check_davenport_prop(const Zonotope& z, long k, const EnumerationLimits& limits)
{
    require_full_dimensional(z);
    if (!is_prime_power(k))
        throw PreconditionError("davenport: k is not a prime power");
    const long n = static_cast<long>(z.ambient_dim());
    const long m = static_cast<long>(z.generator_count());
    if (m < n * (k - 1) + 1 || m > k * n)
        throw PreconditionError("davenport: need n(k-1)+1 <= m <= kn");
    for (Index j = 0; j < z.generator_count(); ++j)
        if (!is_primitive(z.generator(j)))
            throw PreconditionError("davenport: generator " + std::to_string(j) + " is not primitive");
    DavenportReport r;
    r.m = m;
    r.lambda1 = difference_minima(z, limits).lambdas.front();
    r.bound = Rational(n) / r.lambda1;
    r.holds = Rational(m) <= r.bound;
    return r;
}

QFamilyInstance q_family(long n, long l)
{
    if (n < 2 || l < 1)
        throw PreconditionError("q family: need n >= 2 and l >= 1");
    const long corners = 1L << (n - 1);
    RatMatrix pts = RatMatrix::Zero(n, corners + 2);
    for (long mask = 0; mask < corners; ++mask)
        for (long i = 0; i < n - 1; ++i)
            pts(i, mask) = (mask >> (n - 2 - i)) & 1 ? l : -l;
    pts(n - 1, corners) = 1;
    pts(n - 1, corners + 1) = -1;
    return {n, l, VPolytope(std::move(pts))};
}

Rational bernoulli(long m)
{
    if (m < 0)
        throw PreconditionError("bernoulli: negative index");
    // sum_{k=0}^{m} C(m+1,k) B_k = m+1
    std::vector<Rational> b;
    for (long t = 0; t <= m; ++t)
    {
        Rational s = 0;
        for (long k = 0; k < t; ++k)
            s += Rational(binomial(t + 1, k)) * b[static_cast<std::size_t>(k)];
        b.push_back((Rational(t + 1) - s) / Rational(t + 1));
    }
    return b.back();
}

Rational p_coeff(long i, long j)
{
    if (j < 0 || i < 0 || i > j + 1)
        throw PreconditionError("p_coeff: need 0 <= i <= j+1");
    if (i == 0)
        return 0;
    Rational s = 0;
    for (long t = i; t <= j + 1; ++t)
    {
        Rational term = Rational(binomial(j + 1, t) * binomial(t, i)) / Rational(j + 1) * bernoulli(j + 1 - t);
        s += (t - i) % 2 == 0 ? term : Rational(-term);
    }
    return s;
}

Polynomial faulhaber_sum(long i)
{
    if (i < 0)
        throw PreconditionError("faulhaber: negative exponent");
    Polynomial c(static_cast<std::size_t>(i) + 2, Rational(0));
    for (long t = 1; t <= i + 1; ++t)
        c[static_cast<std::size_t>(t)] = p_coeff(t, i);
    return c;
}

EhrhartPoly q_family_ehrhart_closed(long n, long l)
{
    if (n < 2 || l < 1)
        throw PreconditionError("q family: need n >= 2 and l >= 1");
    const Rational two_l(2 * l);
    EhrhartPoly g{Polynomial(static_cast<std::size_t>(n) + 1, Rational(0))};
    g.coefficients[0] = 1;
    for (long i = 1; i <= n; ++i)
    {
        Rational inner = Rational(binomial(n - 1, i)) * Rational(l);
        for (long j = i - 1; j <= n - 1; ++j)
            inner += p_coeff(i, j) * Rational(binomial(n - 1, j)) * power(two_l, j - i + 1);
        g.coefficients[static_cast<std::size_t>(i)] = 2 * power(two_l, i - 1) * inner;
    }
    return g;
}

Rational q_family_sigma_closed(long n, long l, long i)
{
    if (n < 2 || l < 1)
        throw PreconditionError("q family: need n >= 2 and l >= 1");
    if (i < 0 || i > n)
        throw PreconditionError("q family: sigma index out of range");
    const Rational two_l(2 * l);
    Rational s = Rational(binomial(n - 1, i)) * power(two_l, i);
    if (i >= 1)
        s += 2 * Rational(binomial(n - 1, i - 1)) * power(two_l, i - 1);
    return s;
}

std::optional<long> find_violation(long n, long i, const Rational& c, long l_max)
{
    const bool supported = (i == n - 2 && n >= 3) || (i == n - 3 && n >= 4);
    if (!supported)
        throw PreconditionError("find_violation: i must be n-2 (n >= 3) or n-3 (n >= 4)");
    if (c <= 0)
        throw PreconditionError("find_violation: factor must be positive");
    for (long l = 1; l <= l_max; ++l)
        if (q_family_ehrhart_closed(n, l)[i] > c * q_family_sigma_closed(n, l, i))
            return l;
    return std::nullopt;
}

}  // namespace latpoly
