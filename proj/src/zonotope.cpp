#include "latpoly/zonotope.hpp"

#include <functional>

#include "latpoly/linalg.hpp"

namespace latpoly {

Zonotope::Zonotope(IntMatrix generators) : generators_(std::move(generators))
{
    if (generators_.rows() == 0)
        throw PreconditionError("zonotope: ambient dimension must be positive");
}

Index Zonotope::zero_generator_count() const
{
    Index count = 0;
    for (Index j = 0; j < generators_.cols(); ++j)
        if ((generators_.col(j).array() == Integer(0)).all())
            ++count;
    return count;
}

Index Zonotope::dimension() const
{
    return rank(generators_);
}

HullSum Zonotope::body() const
{
    const Index m = generator_count();
    if (m == 0)
        return HullSum::hull(RatMatrix::Zero(ambient_dim(), 1));
    RatMatrix g = RatMatrix::Zero(ambient_dim(), 2 * m);
    for (Index j = 0; j < m; ++j)
        g.col(2 * j + 1) = to_rational(IntVector(generators_.col(j)));
    return HullSum(std::move(g), std::vector<Index>(static_cast<std::size_t>(m), 2));
}

GaugeBody Zonotope::difference_body() const
{
    const Index m = generator_count();
    if (m == 0)
        throw PreconditionError("difference body: zonotope has no generators");
    RatMatrix g(ambient_dim(), 2 * m);
    for (Index j = 0; j < m; ++j)
    {
        RatVector v = to_rational(IntVector(generators_.col(j)));
        g.col(2 * j) = -v;
        g.col(2 * j + 1) = v;
    }
    return GaugeBody::from_symmetric_body(HullSum(std::move(g), std::vector<Index>(static_cast<std::size_t>(m), 2)));
}

VPolytope as_vpolytope(const Zonotope& z, Index generator_cap)
{
    const Index m = z.generator_count();
    if (m > generator_cap)
        throw LimitExceeded("generator cap: " + std::to_string(m) + " generators exceed " +
                            std::to_string(generator_cap));
    const Index count = Index{1} << m;
    RatMatrix pts = RatMatrix::Zero(z.ambient_dim(), count);
    for (Index mask = 0; mask < count; ++mask)
        for (Index j = 0; j < m; ++j)
            if (mask & (Index{1} << j))
                pts.col(mask) += to_rational(IntVector(z.generators().col(j)));
    return VPolytope(std::move(pts));
}

namespace {

IntMatrix select_columns(const IntMatrix& m, const std::vector<Index>& cols)
{
    IntMatrix out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        out.col(static_cast<Index>(j)) = m.col(cols[j]);
    return out;
}

// Sums f(X) over linearly independent i-subsets X of generators, i = 1..dim.
EhrhartPoly sum_over_independent_subsets(const Zonotope& z, const std::function<Integer(const IntMatrix&)>& f)
{
    const Index d = z.dimension();
    EhrhartPoly out{Polynomial(static_cast<std::size_t>(d) + 1, Rational(0))};
    out.coefficients[0] = 1;
    for (Index i = 1; i <= d; ++i)
    {
        Integer total = 0;
        for (const auto& subset : combinations(z.generator_count(), i))
        {
            IntMatrix x = select_columns(z.generators(), subset);
            if (rank(x) == i)
                total += f(x);
        }
        out.coefficients[static_cast<std::size_t>(i)] = Rational(total);
    }
    return out;
}

}  // namespace

Integer zonotope_volume(const Zonotope& z)
{
    const Index n = z.ambient_dim();
    Integer total = 0;
    for (const auto& subset : combinations(z.generator_count(), n))
        total += abs(determinant(select_columns(z.generators(), subset)));
    return total;
}

EhrhartPoly ehrhart_stanley(const Zonotope& z)
{
    return sum_over_independent_subsets(z, [](const IntMatrix& x) { return gcd_of_minors(x); });
}

EhrhartPoly ehrhart_geometric(const Zonotope& z)
{
    return sum_over_independent_subsets(z, [](const IntMatrix& x) { return sublattice_index(x); });
}

bool is_general_position(const Zonotope& z)
{
    const Index n = z.ambient_dim();
    if (z.generator_count() < n)
        throw PreconditionError("general position: fewer generators than the dimension");
    for (const auto& subset : combinations(z.generator_count(), n))
        if (determinant(select_columns(z.generators(), subset)) == 0)
            return false;
    return true;
}

bool is_primitive(const IntVector& v)
{
    Integer g = content(v);
    if (g == 0)
        throw PreconditionError("primitive: zero vector");
    return g == 1;
}

SubsetBijection basis_exchange_bijection(const IntMatrix& b, const IntMatrix& a, Index i)
{
    const Index n = b.rows();
    if (b.cols() != n || a.rows() != n || a.cols() != n)
        throw PreconditionError("basis exchange: need two families of n vectors in dimension n");
    if (determinant(b) == 0 || determinant(a) == 0)
        throw PreconditionError("basis exchange: dependent input family");
    if (i < 1 || i > n - 1)
        throw PreconditionError("basis exchange: need 1 <= i <= n-1");

    const auto left = combinations(n, i);
    const auto right = combinations(n, n - i);
    const std::size_t size = left.size();

    std::vector<std::vector<std::size_t>> adjacent(size);
    for (std::size_t r = 0; r < size; ++r)
    {
        for (std::size_t c = 0; c < size; ++c)
        {
            IntMatrix joint(n, n);
            joint << select_columns(b, left[r]), select_columns(a, right[c]);
            if (determinant(joint) != 0)
                adjacent[r].push_back(c);
        }
    }

    // Kuhn's augmenting paths; existence of a perfect matching follows from
    // det[b_I ∧ a_J] != 0.
    std::vector<long> match_of_right(size, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
        for (std::size_t c : adjacent[r])
        {
            if (seen[c])
                continue;
            seen[c] = true;
            if (match_of_right[c] < 0 || augment(static_cast<std::size_t>(match_of_right[c]), seen))
            {
                match_of_right[c] = static_cast<long>(r);
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = 0; r < size; ++r)
    {
        std::vector<bool> seen(size, false);
        if (!augment(r, seen))
            throw std::logic_error("basis exchange: no perfect matching");
    }

    SubsetBijection phi;
    for (std::size_t c = 0; c < size; ++c)
        phi[left[static_cast<std::size_t>(match_of_right[c])]] = right[c];
    return phi;
}

}  // namespace latpoly
