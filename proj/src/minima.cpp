#include "latpoly/minima.hpp"

#include <algorithm>
#include <set>

namespace latpoly {

Rational MinimaResult::product() const
{
    Rational p = 1;
    for (const Rational& l : lambdas)
        p *= l;
    return p;
}

namespace {

struct Candidate
{
    Rational gauge;
    Integer l1;
    IntVector z;
};

bool candidate_less(const Candidate& a, const Candidate& b)
{
    if (a.gauge != b.gauge)
        return a.gauge < b.gauge;
    if (a.l1 != b.l1)
        return a.l1 < b.l1;
    return std::lexicographical_compare(a.z.begin(), a.z.end(), b.z.begin(), b.z.end());
}

// Representative of {z, -z}: first nonzero coordinate positive.
bool is_canonical(const IntVector& z)
{
    for (Index i = 0; i < z.size(); ++i)
        if (z(i) != 0)
            return z(i) > 0;
    return false;
}

Integer l1_norm(const IntVector& z)
{
    Integer s = 0;
    for (Index i = 0; i < z.size(); ++i)
        s += abs(z(i));
    return s;
}

MinimaResult greedy_select(std::vector<Candidate>& candidates, Index wanted, Index ambient)
{
    std::sort(candidates.begin(), candidates.end(), candidate_less);
    MinimaResult out;
    IntMatrix chosen(ambient, 0);
    for (const Candidate& c : candidates)
    {
        if (static_cast<Index>(out.lambdas.size()) == wanted)
            break;
        IntMatrix trial(ambient, chosen.cols() + 1);
        trial << chosen, c.z;
        if (rank(trial) == trial.cols())
        {
            chosen = std::move(trial);
            out.lambdas.push_back(c.gauge);
            out.witnesses.push_back(c.z);
        }
    }
    if (static_cast<Index>(out.lambdas.size()) != wanted)
        throw std::logic_error("successive minima: enumeration bound missed independent vectors");
    return out;
}

}  // namespace

MinimaResult successive_minima(const GaugeBody& body, const EnumerationLimits& limits)
{
    const Index n = body.ambient_dim();
    Rational bound = 0;
    for (Index i = 0; i < n; ++i)
    {
        IntVector e = IntVector::Zero(n);
        e(i) = 1;
        bound = std::max(bound, body.gauge(e));
    }

    std::vector<Candidate> candidates;
    for_each_lattice_point(body.body().scaled(bound), limits, [&](const IntVector& z) {
        if (!is_canonical(z))
            return;
        candidates.push_back({body.gauge(z), l1_norm(z), z});
    });
    return greedy_select(candidates, n, n);
}

MinimaResult successive_minima_section(const GaugeBody& body, const LatticeBasis& section,
                                       const EnumerationLimits& limits)
{
    const Index n = body.ambient_dim();
    const Index k = section.rank();
    if (section.ambient_dim() != n)
        throw PreconditionError("section minima: basis lives in a different space");
    if (k == 0)
        return {};
    if (gcd_of_minors(section.matrix()) != 1)
        throw PreconditionError("section minima: basis is not saturated");
    const IntMatrix& basis = section.matrix();

    Rational bound = 0;
    for (Index j = 0; j < k; ++j)
        bound = std::max(bound, body.gauge(IntVector(basis.col(j))));

    // Coordinates c of points L c in bound * K: pick k rows of L with
    // nonzero minor and invert them against the ambient bounding box.
    std::vector<Index> rows(k);
    for (Index i = 0; i < k; ++i)
        rows[i] = i;
    IntMatrix sub(k, k);
    do
    {
        for (Index i = 0; i < k; ++i)
            sub.row(i) = basis.row(rows[i]);
        if (determinant(sub) != 0)
            break;
    } while (next_combination(rows, n));
    RatMatrix inv = solve_square(to_rational(sub), RatMatrix::Identity(k, k));

    RatVector half_width(k);
    for (Index i = 0; i < k; ++i)
    {
        RatVector e = RatVector::Zero(n);
        e(rows[i]) = 1;
        half_width(i) = bound * body.support(e);
    }
    IntVector c_max(k);
    Integer volume = 1;
    for (Index j = 0; j < k; ++j)
    {
        Rational w = 0;
        for (Index i = 0; i < k; ++i)
            w += abs(inv(j, i)) * half_width(i);
        c_max(j) = floor_of(w);
        volume *= 2 * c_max(j) + 1;
    }
    if (volume > limits.max_box)
        throw LimitExceeded("section minima: coefficient box holds " + volume.str() + " points");

    std::vector<Candidate> candidates;
    IntVector c = -c_max;
    for (;;)
    {
        if (is_canonical(c))
        {
            IntVector z = basis * c;
            Rational g = body.gauge(z);
            if (g <= bound)
                candidates.push_back({g, l1_norm(z), z});
        }
        Index j = 0;
        while (j < k && c(j) == c_max(j))
        {
            c(j) = -c_max(j);
            ++j;
        }
        if (j == k)
            break;
        ++c(j);
    }
    return greedy_select(candidates, k, n);
}

SandwichReport minkowski_sandwich(const MinimaResult& minima, const Rational& vol)
{
    const long n = static_cast<long>(minima.lambdas.size());
    SandwichReport r;
    r.product = minima.product() * vol;
    r.upper_bound = Rational(Integer(1) << n);
    r.lower_bound = r.upper_bound / Rational(factorial(n));
    r.lower_ok = r.lower_bound <= r.product;
    r.upper_ok = r.product <= r.upper_bound;
    return r;
}

SandwichReport minkowski_sandwich(const GaugeBody& body, const Rational& vol, const EnumerationLimits& limits)
{
    return minkowski_sandwich(successive_minima(body, limits), vol);
}

SectionLemmaReport check_section_lemma(const GaugeBody& body, const MinimaResult& minima,
                                       const LatticeBasis& section, const std::vector<Index>& excluded,
                                       const EnumerationLimits& limits)
{
    const Index n = body.ambient_dim();
    const Index i = section.rank();
    if (static_cast<Index>(minima.witnesses.size()) != n)
        throw PreconditionError("section lemma: need all n minima");
    if (i < 1 || i >= n || static_cast<Index>(excluded.size()) != n - i)
        throw PreconditionError("section lemma: need 1 <= dim L <= n-1 and n - dim L excluded indices");
    std::set<Index> ex(excluded.begin(), excluded.end());
    if (static_cast<Index>(ex.size()) != n - i || *ex.begin() < 0 || *ex.rbegin() >= n)
        throw PreconditionError("section lemma: excluded indices must be distinct and in range");

    IntMatrix joint(n, n);
    Index col = 0;
    for (Index j : ex)
        joint.col(col++) = minima.witnesses[static_cast<std::size_t>(j)];
    joint.rightCols(i) = section.matrix();
    if (rank(joint) != n)
        throw PreconditionError("subspaces intersect");

    SectionLemmaReport r;
    r.section_minima = successive_minima_section(body, section, limits);
    r.section_product = r.section_minima.product();
    r.minima_product = 1;
    for (Index k = 0; k < n; ++k)
        if (!ex.count(k))
            r.minima_product *= minima.lambdas[static_cast<std::size_t>(k)];
    r.holds = r.section_product >= r.minima_product;
    return r;
}

}  // namespace latpoly
