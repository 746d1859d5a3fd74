#include <catch_amalgamated.hpp>

#include "latpoly/conjecture.hpp"
#include "latpoly/minima.hpp"
#include "support.hpp"

using namespace latpoly;

namespace {

void check_witnesses(const GaugeBody& body, const MinimaResult& m)
{
    const Index n = static_cast<Index>(m.witnesses.size());
    IntMatrix w(body.ambient_dim(), n);
    for (Index j = 0; j < n; ++j)
    {
        w.col(j) = m.witnesses[static_cast<std::size_t>(j)];
        CHECK(body.gauge(m.witnesses[static_cast<std::size_t>(j)]) == m.lambdas[static_cast<std::size_t>(j)]);
    }
    CHECK(oracle::minor_rank(w) == n);
    for (std::size_t j = 1; j < m.lambdas.size(); ++j)
        CHECK(m.lambdas[j - 1] <= m.lambdas[j]);
}

}  // namespace

TEST_CASE("minima of the Q family are (1/l, ..., 1/l, 1)")
{
    for (long n = 2; n <= 3; ++n)
        for (long l = 1; l <= 4; ++l)
        {
            GaugeBody body = GaugeBody::symmetric(q_family(n, l).polytope);
            MinimaResult m = successive_minima(body);
            std::vector<Rational> expected(static_cast<std::size_t>(n - 1), Rational(1, l));
            expected.push_back(1);
            CHECK(m.lambdas == expected);
            check_witnesses(body, m);
        }
}

TEST_CASE("minima of cubes and cross-polytopes")
{
    for (Index n = 1; n <= 3; ++n)
    {
        IntMatrix cross(n, 2 * n);
        cross << IntMatrix::Identity(n, n), -IntMatrix::Identity(n, n);
        MinimaResult m = successive_minima(GaugeBody::symmetric(VPolytope::from_integer(cross)));
        CHECK(m.lambdas == std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    }
    VPolytope box = VPolytope::from_rows({{3, 1}, {3, -1}, {-3, 1}, {-3, -1}});
    CHECK(successive_minima(GaugeBody::symmetric(box)).lambdas == std::vector<Rational>{Rational(1, 3), 1});
}

TEST_CASE("minima agree with the definition on random symmetric bodies")
{
    for (int trial = 0; trial < 30; ++trial)
    {
        Index n = oracle::uniform(2, 3);
        VPolytope p = oracle::random_symmetric_polytope(n, n + oracle::uniform(0, 1), 3);
        GaugeBody body = GaugeBody::symmetric(p);
        MinimaResult m = successive_minima(body);
        CHECK(m.lambdas == oracle::minima(p));
        check_witnesses(body, m);
    }
}

TEST_CASE("minima of difference bodies")
{
    VPolytope square = VPolytope::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(successive_minima(difference_gauge_view(square)).lambdas == std::vector<Rational>{1, 1});

    for (int trial = 0; trial < 15; ++trial)
    {
        Index n = oracle::uniform(2, 3);
        VPolytope p = oracle::random_lattice_polytope(n, n + 1, 2);
        IntMatrix diffs(n, p.point_count() * p.point_count());
        for (Index i = 0; i < p.point_count(); ++i)
            for (Index j = 0; j < p.point_count(); ++j)
                diffs.col(i * p.point_count() + j) = to_integer(RatVector(p.point(i) - p.point(j)));
        VPolytope explicit_difference = VPolytope::from_integer(diffs);
        CHECK(successive_minima(difference_gauge_view(p)).lambdas == oracle::minima(explicit_difference));
    }
}

TEST_CASE("Minkowski sandwich on symmetric bodies")
{
    std::vector<VPolytope> bodies{
        q_family(2, 1).polytope, q_family(3, 2).polytope,
        VPolytope::from_rows({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}),
        VPolytope::from_rows({{1, 2}, {-1, -2}, {2, -2}, {-2, 2}}),
    };
    for (int trial = 0; trial < 15; ++trial)
        bodies.push_back(oracle::random_symmetric_polytope(oracle::uniform(2, 3), 3, 3));
    for (const VPolytope& p : bodies)
    {
        SandwichReport r = minkowski_sandwich(GaugeBody::symmetric(p), volume(p));
        CHECK(r.lower_ok);
        CHECK(r.upper_ok);
        CHECK(r.lower_bound <= r.product);
        CHECK(r.product <= r.upper_bound);
    }
    // The cross-polytope attains the lower bound, the cube the upper one.
    SandwichReport cross = minkowski_sandwich(GaugeBody::symmetric(q_family(2, 1).polytope), 2);
    CHECK(cross.product == cross.lower_bound);
    SandwichReport cube = minkowski_sandwich(
        GaugeBody::symmetric(VPolytope::from_rows({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})), 4);
    CHECK(cube.product == cube.upper_bound);
}

TEST_CASE("minima of sections")
{
    VPolytope cube = VPolytope::from_rows(
        {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    GaugeBody body = GaugeBody::symmetric(cube);
    IntMatrix diag(3, 1);
    diag << 1, 1, 0;
    MinimaResult m = successive_minima_section(body, LatticeBasis(3, diag), {});
    CHECK(m.lambdas == std::vector<Rational>{1});
    IntMatrix doubled = diag * Integer(2);
    CHECK_THROWS_AS(successive_minima_section(body, LatticeBasis(3, doubled), {}), PreconditionError);

    IntMatrix plane(3, 2);
    plane << 1, 0, 0, 1, 1, 1;
    MinimaResult pm = successive_minima_section(body, saturate(plane), {});
    CHECK(pm.lambdas == std::vector<Rational>{1, 1});
    for (const IntVector& w : pm.witnesses)
        CHECK(w(2) == w(0) + w(1));
}

TEST_CASE("section lemma on random bodies")
{
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 15; ++trial)
    {
        const Index n = 3;
        VPolytope p = oracle::random_symmetric_polytope(n, 3, 3);
        GaugeBody body = GaugeBody::symmetric(p);
        MinimaResult minima = successive_minima(body);
        Index i = oracle::uniform(1, 2);
        LatticeBasis section = saturate(oracle::random_matrix(n, i, -2, 2));
        if (section.rank() != i)
            continue;
        std::vector<Index> excluded;
        for (const auto& candidate : combinations(n, n - i))
        {
            IntMatrix joint(n, n);
            for (Index j = 0; j < n - i; ++j)
                joint.col(j) = minima.witnesses[static_cast<std::size_t>(candidate[static_cast<std::size_t>(j)])];
            joint.rightCols(i) = section.matrix();
            if (oracle::minor_rank(joint) == n)
            {
                excluded = candidate;
                break;
            }
        }
        REQUIRE(!excluded.empty());
        SectionLemmaReport r = check_section_lemma(body, minima, section, excluded, {});
        CHECK(r.holds);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("section lemma rejects intersecting subspaces")
{
    VPolytope cross = q_family(2, 1).polytope;
    GaugeBody body = GaugeBody::symmetric(cross);
    MinimaResult minima = successive_minima(body);
    LatticeBasis line(2, IntMatrix(minima.witnesses[0]));
    CHECK_THROWS_WITH(check_section_lemma(body, minima, line, {0}, {}),
                      Catch::Matchers::ContainsSubstring("subspaces intersect"));
}
