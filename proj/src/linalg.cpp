#include "latpoly/linalg.hpp"

#include <algorithm>

namespace latpoly {

RatMatrix solve_square(const RatMatrix& a, const RatMatrix& b)
{
    const Index n = a.rows();
    if (a.cols() != n || b.rows() != n)
        throw PreconditionError("solve_square: dimension mismatch");
    RatMatrix aug(n, n + b.cols());
    aug << a, b;
    for (Index c = 0; c < n; ++c)
    {
        Index p = c;
        while (p < n && aug(p, c) == 0)
            ++p;
        if (p == n)
            throw PreconditionError("solve_square: singular matrix");
        if (p != c)
            aug.row(p).swap(aug.row(c));
        Rational inv = 1 / aug(c, c);
        for (Index j = c; j < aug.cols(); ++j)
            aug(c, j) *= inv;
        for (Index i = 0; i < n; ++i)
        {
            if (i == c || aug(i, c) == 0)
                continue;
            Rational f = aug(i, c);
            for (Index j = c; j < aug.cols(); ++j)
                aug(i, j) -= f * aug(c, j);
        }
    }
    return aug.rightCols(b.cols());
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0)
    {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Integer gcd_of_minors(const IntMatrix& m)
{
    const Index n = m.rows();
    const Index k = m.cols();
    if (k > n || rank(m) != k)
        throw PreconditionError("dependent columns");
    if (k == 0)
        return 1;
    Integer g = 0;
    std::vector<Index> rows(k);
    for (Index i = 0; i < k; ++i)
        rows[i] = i;
    IntMatrix sub(k, k);
    do
    {
        for (Index i = 0; i < k; ++i)
            sub.row(i) = m.row(rows[i]);
        g = gcd(g, determinant(sub));
        if (g == 1)
            break;
    } while (next_combination(rows, n));
    return abs(g);
}

namespace {

// Euclidean division with remainder in [0, |d|).
Integer floor_div(const Integer& a, const Integer& d)
{
    Integer q = a / d;
    if ((a - q * d) < 0)
        q += (d > 0) ? -1 : 1;
    return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m)
{
    HermiteForm out;
    out.h = m;
    out.u = IntMatrix::Identity(m.cols(), m.cols());
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const Index cols = m.cols();
    Index c = 0;
    for (Index r = 0; r < m.rows() && c < cols; ++r)
    {
        for (Index j = c + 1; j < cols; ++j)
        {
            if (h(r, j) == 0)
                continue;
            Integer a = h(r, c);
            Integer b = h(r, j);
            ExtendedGcd e = extended_gcd(a, b);
            Integer p = a / e.g;
            Integer q = b / e.g;
            // [col_c col_j] <- [col_c col_j] * [[x, -q], [y, p]], determinant 1
            IntVector hc = h.col(c), hj = h.col(j);
            h.col(c) = e.x * hc + e.y * hj;
            h.col(j) = p * hj - q * hc;
            IntVector uc = u.col(c), uj = u.col(j);
            u.col(c) = e.x * uc + e.y * uj;
            u.col(j) = p * uj - q * uc;
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0)
        {
            h.col(c) = -h.col(c);
            u.col(c) = -u.col(c);
        }
        for (Index j = 0; j < c; ++j)
        {
            Integer q = floor_div(h(r, j), h(r, c));
            if (q == 0)
                continue;
            h.col(j) -= q * h.col(c);
            u.col(j) -= q * u.col(c);
        }
        out.pivot_rows.push_back(r);
        ++c;
    }
    out.rank = c;
    return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m)
{
    IntMatrix a = m;
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<Integer> diag;

    for (Index t = 0; t < std::min(rows, cols); ++t)
    {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        Index bi = -1, bj = -1;
        for (Index i = t; i < rows; ++i)
            for (Index j = t; j < cols; ++j)
                if (a(i, j) != 0 && (bi < 0 || abs(a(i, j)) < abs(a(bi, bj))))
                    bi = i, bj = j;
        if (bi < 0)
            break;
        a.row(t).swap(a.row(bi));
        a.col(t).swap(a.col(bj));

        for (;;)
        {
            bool clean = true;
            for (Index i = t + 1; i < rows; ++i)
            {
                if (a(i, t) == 0)
                    continue;
                Integer q = a(i, t) / a(t, t);
                a.row(i) -= q * a.row(t);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (Index j = t + 1; j < cols; ++j)
            {
                if (a(t, j) == 0)
                    continue;
                Integer q = a(t, j) / a(t, t);
                a.col(j) -= q * a.col(t);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
            // A remainder smaller than the pivot survived; make it the pivot.
            Index pi = t, pj = t;
            for (Index i = t + 1; i < rows; ++i)
                if (a(i, t) != 0 && abs(a(i, t)) < abs(a(pi, pj)))
                    pi = i, pj = t;
            for (Index j = t + 1; j < cols; ++j)
                if (a(t, j) != 0 && abs(a(t, j)) < abs(a(pi, pj)))
                    pi = t, pj = j;
            a.row(t).swap(a.row(pi));
            a.col(t).swap(a.col(pj));
        }
        diag.push_back(abs(a(t, t)));
    }

    // diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i)
    {
        for (std::size_t j = i + 1; j < diag.size(); ++j)
        {
            Integer g = gcd(diag[i], diag[j]);
            Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

LatticeBasis::LatticeBasis(Index ambient_dim, IntMatrix columns)
    : ambient_dim_(ambient_dim), basis_(std::move(columns))
{
    if (basis_.rows() != ambient_dim_)
        throw PreconditionError("lattice basis: vectors do not live in the ambient space");
    if (basis_.cols() > ambient_dim_ || latpoly::rank(basis_) != basis_.cols())
        throw PreconditionError("lattice basis: dependent vectors");
}

LatticeBasis LatticeBasis::empty(Index ambient_dim)
{
    return LatticeBasis(ambient_dim, IntMatrix(ambient_dim, 0));
}

LatticeBasis LatticeBasis::standard(Index ambient_dim)
{
    return LatticeBasis(ambient_dim, IntMatrix::Identity(ambient_dim, ambient_dim));
}

IntMatrix integer_kernel(const IntMatrix& a)
{
    HermiteForm hf = hermite_normal_form(a);
    return hf.u.rightCols(a.cols() - hf.rank);
}

namespace {

IntMatrix hermite_basis(const IntMatrix& columns)
{
    HermiteForm hf = hermite_normal_form(columns);
    return hf.h.leftCols(hf.rank);
}

}  // namespace

LatticeBasis saturate(const IntMatrix& columns)
{
    const Index n = columns.rows();
    const Index r = rank(columns);
    if (r == 0)
        return LatticeBasis::empty(n);
    if (r == n)
        return LatticeBasis::standard(n);
    // The saturation is the integer kernel of the orthogonal complement.
    IntMatrix complement = integer_kernel(columns.transpose());
    IntMatrix sat = integer_kernel(complement.transpose());
    return LatticeBasis(n, hermite_basis(sat));
}

LatticeBasis saturate(const std::vector<IntVector>& vectors, Index ambient_dim)
{
    IntMatrix m(ambient_dim, static_cast<Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j)
    {
        if (vectors[j].size() != ambient_dim)
            throw PreconditionError("saturate: vector dimension mismatch");
        m.col(static_cast<Index>(j)) = vectors[j];
    }
    return saturate(m);
}

Integer sublattice_index(const IntMatrix& v)
{
    const Index k = v.cols();
    if (k > v.rows() || rank(v) != k)
        throw PreconditionError("dependent columns");
    if (k == 0)
        return 1;
    const IntMatrix s = saturate(v).matrix();

    std::vector<Index> rows(k);
    for (Index i = 0; i < k; ++i)
        rows[i] = i;
    IntMatrix s_rows(k, k);
    do
    {
        for (Index i = 0; i < k; ++i)
            s_rows.row(i) = s.row(rows[i]);
        if (determinant(s_rows) != 0)
            break;
    } while (next_combination(rows, v.rows()));

    IntMatrix v_rows(k, k);
    for (Index i = 0; i < k; ++i)
        v_rows.row(i) = v.row(rows[i]);
    // V = S D with D integral because S is a basis of the saturation.
    IntMatrix d = to_integer(solve_square(to_rational(s_rows), to_rational(v_rows)));
    if (s * d != v)
        throw std::logic_error("sublattice_index: basis change does not reproduce the generators");
    return abs(determinant(d));
}

LatticeDeterminant lattice_determinant(const LatticeBasis& basis)
{
    if (basis.rank() == 0)
        throw PreconditionError("lattice_determinant: empty basis");
    IntMatrix gram_matrix = basis.matrix().transpose() * basis.matrix();
    LatticeDeterminant out;
    out.gram = determinant(gram_matrix);
    Integer root = sqrt(out.gram);
    if (root * root == out.gram)
        out.det = root;
    return out;
}

std::optional<AffineLattice> solve_affine_lattice(const IntMatrix& a, const IntVector& b)
{
    if (a.rows() != b.size())
        throw PreconditionError("solve_affine_lattice: dimension mismatch");
    const Index n = a.cols();
    HermiteForm hf = hermite_normal_form(a);

    IntVector y = IntVector::Zero(n);
    for (Index c = 0; c < hf.rank; ++c)
    {
        const Index r = hf.pivot_rows[c];
        Integer rhs = b(r);
        for (Index cc = 0; cc < c; ++cc)
            rhs -= hf.h(r, cc) * y(cc);
        if (rhs % hf.h(r, c) != 0)
            return std::nullopt;
        y(c) = rhs / hf.h(r, c);
    }
    if (hf.h * y != b)
        return std::nullopt;

    IntVector base = hf.u * y;
    IntMatrix kernel = hf.u.rightCols(n - hf.rank);
    IntMatrix dirs = kernel.cols() > 0 ? hermite_basis(kernel) : kernel;
    return AffineLattice{base, LatticeBasis(n, dirs)};
}

Polynomial interpolate_polynomial(const std::vector<std::pair<Integer, Rational>>& points, Index degree)
{
    if (static_cast<Index>(points.size()) != degree + 1)
        throw PreconditionError("interpolate_polynomial: need exactly degree + 1 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw PreconditionError("interpolate_polynomial: repeated abscissa");

    Polynomial result(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        // Lagrange basis polynomial for node i, built by repeated multiplication.
        Polynomial basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j)
        {
            if (j == i)
                continue;
            const Rational xj = points[j].first;
            Polynomial next(basis.size() + 1, Rational(0));
            for (std::size_t t = 0; t < basis.size(); ++t)
            {
                next[t + 1] += basis[t];
                next[t] -= xj * basis[t];
            }
            basis = std::move(next);
            denom *= Rational(points[i].first) - xj;
        }
        Rational scale = points[i].second / denom;
        for (std::size_t t = 0; t < basis.size(); ++t)
            result[t] += scale * basis[t];
    }
    return result;
}

Rational evaluate(const Polynomial& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

}  // namespace latpoly
