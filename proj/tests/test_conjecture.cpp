#include <catch_amalgamated.hpp>

#include "latpoly/conjecture.hpp"
#include "support.hpp"

using namespace latpoly;

namespace {

IntMatrix columns(Index n, std::initializer_list<std::initializer_list<long>> cols)
{
    IntMatrix m(n, static_cast<Index>(cols.size()));
    Index j = 0;
    for (const auto& c : cols)
    {
        Index i = 0;
        for (long v : c)
            m(i++, j) = v;
        ++j;
    }
    return m;
}

Rational subset_sum_sigma(const std::vector<Rational>& x, Index i)
{
    Rational total = 0;
    for (const auto& subset : combinations(static_cast<Index>(x.size()), i))
    {
        Rational prod = 1;
        for (Index k : subset)
            prod *= x[static_cast<std::size_t>(k)];
        total += prod;
    }
    return total;
}

VPolytope cube(Index n, long lo, long hi)
{
    IntMatrix pts(n, Index{1} << n);
    for (Index mask = 0; mask < (Index{1} << n); ++mask)
        for (Index i = 0; i < n; ++i)
            pts(i, mask) = (mask >> i) & 1 ? hi : lo;
    return VPolytope::from_integer(pts);
}

Rational power(Rational base, long e)
{
    Rational r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials")
{
    CHECK(sigma(std::vector<Rational>{3, 4}, 0) == 1);
    CHECK(sigma(std::vector<Rational>{1, 1, 1}, 2) == 3);
    CHECK(sigma(std::vector<Rational>{4, 4, 2}, 1) == 10);
    CHECK_THROWS_AS(sigma(std::vector<Rational>{1, 2}, 3), PreconditionError);
    for (int trial = 0; trial < 50; ++trial)
    {
        std::vector<Rational> x;
        for (long k = oracle::uniform(0, 6); k > 0; --k)
            x.push_back(Rational(oracle::uniform(-5, 5), oracle::uniform(1, 4)));
        for (Index i = 0; i <= static_cast<Index>(x.size()); ++i)
            CHECK(sigma(x, i) == subset_sum_sigma(x, i));
    }
}

TEST_CASE("sigma of polytopes")
{
    for (Index n = 1; n <= 3; ++n)
        for (Index i = 0; i <= n; ++i)
            CHECK(sigma_of_polytope(cube(n, 0, 1), i) == Rational(binomial(n, i)));
    for (long n = 2; n <= 4; ++n)
        for (long l = 1; l <= 3; ++l)
        {
            if (n == 4 && l == 3)
                continue;
            VPolytope q = q_family(n, l).polytope;
            for (long i = 0; i <= n; ++i)
                CHECK(sigma_of_polytope(q, i) == q_family_sigma_closed(n, l, i));
        }
    CHECK_THROWS_AS(sigma_of_polytope(VPolytope::from_rows({{0, 0}, {1, 1}}), 1), PreconditionError);
}

TEST_CASE("sigma_n bounds the volume")
{
    for (int trial = 0; trial < 15; ++trial)
    {
        Index n = oracle::uniform(2, 3);
        VPolytope p = oracle::random_lattice_polytope(n, n + 2, 2);
        CHECK(sigma_of_polytope(p, n) >= volume(p));
    }
}

TEST_CASE("floor-product conjecture and L(P)")
{
    FloorBound c = conjecture_floor_bound(cube(3, 0, 1));
    CHECK(c.bound == 8);
    CHECK(c.count == 8);
    CHECK(c.holds);

    FloorBound d = conjecture_floor_bound(cube(2, -1, 1));
    CHECK(d.bound == 9);
    CHECK(d.count == 9);

    FloorBound q = conjecture_floor_bound(q_family(3, 2).polytope);
    CHECK(q.bound == 75);
    CHECK(q.count == 27);
    CHECK(q.count == oracle::count_points(q_family(3, 2).polytope));
    CHECK(q.holds);

    CHECK(l_bound(cube(3, 0, 1)) == 8);
    for (long l = 1; l <= 3; ++l)
    {
        // L(k Q^3_l) = prod (k / lambda_j + 1) with 1/lambda = (2l, 2l, 2).
        std::vector<Rational> recip = reciprocal_difference_minima(q_family(3, l).polytope);
        Polynomial lk = l_polynomial(recip);
        CHECK(lk == Polynomial{1, 4 * l + 2, 4 * l * l + 8 * l, 8 * l * l});
        for (long k = 1; k <= 3; ++k)
            CHECK(evaluate(lk, k) == l_bound(dilate(q_family(3, l).polytope, k)));
    }
}

TEST_CASE("L(P) is the sum of all sigma_i and dominates the floor bound")
{
    std::vector<VPolytope> corpus{cube(2, 0, 1), q_family(3, 1).polytope,
                                  VPolytope::from_rows({{0, 0}, {1, 0}, {1, 2}})};
    for (int trial = 0; trial < 15; ++trial)
        corpus.push_back(oracle::random_lattice_polytope(oracle::uniform(2, 3), 4, 2));
    for (const VPolytope& p : corpus)
    {
        const Index n = p.ambient_dim();
        Rational total = 0;
        for (Index i = 0; i <= n; ++i)
            total += sigma_of_polytope(p, i);
        CHECK(l_bound(p) == total);
        FloorBound f = conjecture_floor_bound(p);
        CHECK(Rational(f.bound) <= l_bound(p));
        CHECK(f.holds);
    }
}

TEST_CASE("coefficient reports")
{
    SECTION("cube equality")
    {
        BoundReport r = coefficient_report(Zonotope(IntMatrix::Identity(3, 3)));
        for (const BoundRecord& b : r.records)
        {
            CHECK(b.holds);
            if (b.name == "sigma")
                CHECK(b.g == b.bound);
        }
        CHECK(r.floor.holds);
        CHECK(r.l_holds);
    }
    SECTION("parallelepiped")
    {
        BoundReport r = coefficient_report(Zonotope(columns(2, {{1, 0}, {1, 2}})));
        CHECK(r.sigma_holds);
        CHECK(r.ehrhart.coefficients == Polynomial{1, 2, 2});
        VPolytope p = VPolytope::from_rows({{0, 0}, {1, 0}, {1, 2}, {2, 2}});
        BoundReport rp = coefficient_report(p);
        CHECK(rp.ehrhart == r.ehrhart);
        CHECK(rp.sigmas == r.sigmas);
    }
    SECTION("record names")
    {
        BoundReport r = coefficient_report(Zonotope(columns(2, {{1, 0}, {0, 1}, {1, 1}})));
        std::set<std::string> names;
        for (const BoundRecord& b : r.records)
            names.insert(b.name);
        CHECK(names == std::set<std::string>{"sigma", "factorial", "binomial_power_squared", "general_position"});
        for (const BoundRecord& b : r.records)
        {
            CHECK(b.holds == (b.g <= b.bound));
            if (b.name == "binomial_power_squared")
                CHECK(b.g == r.ehrhart[b.i] * r.ehrhart[b.i]);
        }
    }
    SECTION("Q^3_40 violates g_1 <= 10 sigma_1 but not the floor conjecture")
    {
        BoundReport r = coefficient_report(q_family(3, 40).polytope);
        const Rational g1 = Rational(4, 3) * 1600 + 2;
        CHECK(r.ehrhart[1] == g1);
        CHECK(r.sigmas[1] == 162);
        CHECK(r.ehrhart[1] > 10 * r.sigmas[1]);
        CHECK_FALSE(r.sigma_holds);
        CHECK(r.floor.holds);
    }
    CHECK_THROWS_AS(coefficient_report(VPolytope::from_rows({{0, 0}, {Rational(1, 2), 0}, {0, 1}})),
                    PreconditionError);
}

TEST_CASE("parallelepipeds satisfy g_i <= sigma_i")
{
    for (int trial = 0; trial < 30; ++trial)
    {
        Index n = oracle::uniform(2, 3);
        Zonotope z(oracle::random_basis(n, 2));
        BoundReport r = coefficient_report(z);
        CHECK(r.sigma_holds);
        CHECK(r.floor.holds);
    }
}

TEST_CASE("primitive generators in general position")
{
    PrimitiveGeneratorReport a = check_corollary_primitive(Zonotope(columns(2, {{1, 0}, {0, 1}, {1, 1}})));
    CHECK(a.m == 3);
    CHECK(a.g1 == 3);
    CHECK(a.holds);
    PrimitiveGeneratorReport b = check_corollary_primitive(Zonotope(IntMatrix::Identity(3, 3)));
    CHECK(b.sigma1 == 3);
    CHECK(b.holds);
    PrimitiveGeneratorReport c = check_corollary_primitive(Zonotope(columns(2, {{1, 0}, {0, 1}, {1, 2}, {2, 1}})));
    CHECK(c.m == 4);
    CHECK(c.holds);
    CHECK_THROWS_AS(check_corollary_primitive(Zonotope(columns(2, {{2, 0}, {0, 1}}))), PreconditionError);
    CHECK_THROWS_AS(check_corollary_primitive(Zonotope(columns(2, {{1, 0}, {1, 0}, {0, 1}}))), PreconditionError);
}

TEST_CASE("Davenport constants")
{
    CHECK(davenport_prime_power(1, 2) == 2);
    CHECK(davenport_prime_power(2, 3) == 5);
    CHECK(davenport_prime_power(3, 4) == 10);
    CHECK_THROWS_WITH(davenport_prime_power(2, 6), Catch::Matchers::ContainsSubstring("formula unproven"));
    for (long n = 1; n <= 2; ++n)
        for (long k = 2; k <= 3; ++k)
            CHECK(davenport_constant(n, k) == davenport_prime_power(n, k));
    CHECK(davenport_constant(1, 6) == 6);
    CHECK(davenport_constant(3, 2) == 4);
    CHECK_THROWS_AS(davenport_constant(3, 5), LimitExceeded);
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(9));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("zero-sum bound for zonotopes with many primitive generators")
{
    DavenportReport a = check_davenport_prop(Zonotope(columns(2, {{1, 0}, {0, 1}, {1, 1}})), 2);
    CHECK(a.lambda1 == Rational(1, 2));
    CHECK(a.bound == 4);
    CHECK(a.holds);
    DavenportReport b = check_davenport_prop(Zonotope(columns(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}})), 2);
    CHECK(b.holds);
    CHECK(Rational(b.m) <= b.bound);
    CHECK_THROWS_AS(check_davenport_prop(Zonotope(columns(2, {{1, 0}, {0, 1}})), 2), PreconditionError);
    CHECK_THROWS_AS(check_davenport_prop(Zonotope(columns(2, {{1, 0}, {0, 1}, {1, 1}})), 6), PreconditionError);
}

TEST_CASE("Q family instances")
{
    CHECK(same_body(q_family(2, 1).polytope, VPolytope::from_rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
    CHECK(q_family(3, 2).polytope.point_count() == 6);
    CHECK(hull_vertices(q_family(4, 1).polytope).point_count() == 10);
    CHECK_THROWS_AS(q_family(1, 1), PreconditionError);
    CHECK_THROWS_AS(q_family(3, 0), PreconditionError);
}

TEST_CASE("Bernoulli numbers with B_1 = 1/2")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
}

TEST_CASE("power-sum coefficients")
{
    for (long n = 3; n <= 6; ++n)
    {
        CHECK(p_coeff(n, n - 1) == Rational(1, n));
        CHECK(p_coeff(n, n) == Rational(-1, 2));
        CHECK(p_coeff(n - 1, n) == Rational(n, 12));
        CHECK(p_coeff(n - 2, n) == 0);
    }
    CHECK_THROWS_AS(p_coeff(4, 2), PreconditionError);
    CHECK_THROWS_AS(p_coeff(-1, 2), PreconditionError);

    CHECK(faulhaber_sum(0) == Polynomial{0, 1});
    CHECK(faulhaber_sum(1) == Polynomial{0, Rational(-1, 2), Rational(1, 2)});
    CHECK(faulhaber_sum(2) == Polynomial{0, Rational(1, 6), Rational(-1, 2), Rational(1, 3)});
    for (long i = 0; i <= 6; ++i)
    {
        Polynomial f = faulhaber_sum(i);
        Integer brute = 0;
        for (long k = 0; k <= 20; ++k)
        {
            CHECK(evaluate(f, k) == Rational(brute));
            brute += i == 0 ? Integer(1) : Integer(pow(Integer(k), static_cast<unsigned>(i)));
        }
    }
}

TEST_CASE("closed forms for the Q family match counting")
{
    for (long n = 2; n <= 4; ++n)
        for (long l = 1; l <= 3; ++l)
            CHECK(q_family_ehrhart_closed(n, l) == ehrhart(q_family(n, l).polytope));

    for (long l = 1; l <= 5; ++l)
    {
        EhrhartPoly g = q_family_ehrhart_closed(3, l);
        CHECK(g.coefficients ==
              Polynomial{1, Rational(4, 3) * l * l + 2, Rational(4 * l), Rational(8, 3) * l * l});
    }
    for (long n = 3; n <= 7; ++n)
        for (long l = 1; l <= 4; ++l)
        {
            EhrhartPoly g = q_family_ehrhart_closed(n, l);
            CHECK(g[n - 2] == Rational(n - 1) * power(2 * l, n - 3) * (Rational(2, 3) * l * l + 1));
            if (n >= 4)
                CHECK(g[n - 3] ==
                      Rational(2, 3) * Rational(binomial(n - 1, 2)) * power(2 * l, n - 4) * (2 * l * l + 1));
        }
}

TEST_CASE("violations in the Q family")
{
    CHECK(find_violation(3, 1, 1, 10) == 4L);
    EhrhartPoly g3 = q_family_ehrhart_closed(3, 3);
    CHECK(g3[1] == q_family_sigma_closed(3, 3, 1));
    CHECK(find_violation(3, 1, 10, 40) == 31L);
    CHECK_FALSE(find_violation(3, 1, 10, 30));
    CHECK(find_violation(4, 1, 1, 50).has_value());
    CHECK(find_violation(4, 2, 3, 50).has_value());
    CHECK_THROWS_AS(find_violation(3, 2, 1, 10), PreconditionError);
    CHECK_THROWS_AS(find_violation(3, 0, 1, 10), PreconditionError);
    CHECK_THROWS_AS(find_violation(3, 1, 0, 10), PreconditionError);

    // Counting confirms the first violation.
    EhrhartPoly counted = ehrhart(q_family(3, 4).polytope);
    CHECK(counted[1] == Rational(70, 3));
    CHECK(sigma_of_polytope(q_family(3, 4).polytope, 1) == 18);
}

TEST_CASE("g_{n-2} outgrows sigma_{n-2} in l")
{
    for (long n = 3; n <= 6; ++n)
    {
        // Ratio g / sigma grows with l when the degree in l is larger.
        Rational r1 = q_family_ehrhart_closed(n, 1000)[n - 2] / q_family_sigma_closed(n, 1000, n - 2);
        Rational r2 = q_family_ehrhart_closed(n, 2000)[n - 2] / q_family_sigma_closed(n, 2000, n - 2);
        CHECK(r2 > Rational(3, 2) * r1);
    }
}
