#include "latpoly/lp.hpp"

#include <algorithm>
#include <numeric>

#include "latpoly/linalg.hpp"

namespace latpoly {

namespace {

// Dense simplex tableau: rows of `t` are constraints with the right-hand
// side in the last column; `obj` holds reduced costs and -value at the end.
class Tableau
{
    public:
        Tableau(RatMatrix t, std::vector<Index> basis)
            : t_(std::move(t)), basis_(std::move(basis)), obj_(RatVector::Zero(t_.cols()))
        {
        }

        Index rows() const { return t_.rows(); }
        Index columns() const { return t_.cols() - 1; }
        const RatMatrix& table() const { return t_; }
        const std::vector<Index>& basis() const { return basis_; }
        Rational value() const { return -obj_(columns()); }

        void set_objective(const RatVector& cost)
        {
            obj_ = RatVector::Zero(t_.cols());
            obj_.head(columns()) = cost;
            for (Index i = 0; i < rows(); ++i)
            {
                const Rational& cb = cost(basis_[i]);
                if (cb == 0)
                    continue;
                for (Index j = 0; j < t_.cols(); ++j)
                    if (t_(i, j) != 0)
                        obj_(j) -= cb * t_(i, j);
            }
        }

        void pivot(Index r, Index e)
        {
            const Index width = t_.cols();
            Rational inv = 1 / t_(r, e);
            std::vector<Index> nz;
            for (Index j = 0; j < width; ++j)
            {
                if (t_(r, j) != 0)
                {
                    t_(r, j) *= inv;
                    nz.push_back(j);
                }
            }
            for (Index i = 0; i < rows(); ++i)
            {
                if (i == r || t_(i, e) == 0)
                    continue;
                Rational f = t_(i, e);
                for (Index j : nz)
                    t_(i, j) -= f * t_(r, j);
            }
            if (obj_(e) != 0)
            {
                Rational f = obj_(e);
                for (Index j : nz)
                    obj_(j) -= f * t_(r, j);
            }
            basis_[r] = e;
        }

        // Bland's rule. Returns false when the objective is unbounded.
        bool optimize(const std::vector<bool>& allowed)
        {
            for (;;)
            {
                Index e = -1;
                for (Index j = 0; j < columns(); ++j)
                {
                    if (allowed[j] && obj_(j) > 0)
                    {
                        e = j;
                        break;
                    }
                }
                if (e < 0)
                    return true;
                Index r = -1;
                Rational best;
                for (Index i = 0; i < rows(); ++i)
                {
                    if (t_(i, e) <= 0)
                        continue;
                    Rational ratio = t_(i, columns()) / t_(i, e);
                    if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r]))
                    {
                        r = i;
                        best = ratio;
                    }
                }
                if (r < 0)
                    return false;
                pivot(r, e);
            }
        }

        void drop_row(Index r)
        {
            const Index last = rows() - 1;
            if (r != last)
            {
                t_.row(r).swap(t_.row(last));
                std::swap(basis_[r], basis_[last]);
            }
            t_.conservativeResize(last, Eigen::NoChange);
            basis_.pop_back();
        }

    private:
        RatMatrix t_;
        std::vector<Index> basis_;
        RatVector obj_;
};

}  // namespace

LpOutcome lp_solve(const LpProblem& problem)
{
    const Index nv = problem.objective.size();
    const Index m = problem.constraints.rows();
    if (problem.constraints.cols() != nv && m > 0)
        throw PreconditionError("lp_solve: constraint width differs from objective length");
    if (static_cast<Index>(problem.senses.size()) != m || problem.rhs.size() != m)
        throw PreconditionError("lp_solve: senses/rhs do not match the constraint rows");
    if (!problem.free_variable.empty() && static_cast<Index>(problem.free_variable.size()) != nv)
        throw PreconditionError("lp_solve: free_variable flags do not match the variable count");

    auto is_free = [&](Index j) { return !problem.free_variable.empty() && problem.free_variable[j]; };

    // Column layout: structural (free variables split in two), slack/surplus, artificial.
    std::vector<Index> plus_col(nv), minus_col(nv, -1);
    Index structural = 0;
    for (Index j = 0; j < nv; ++j)
    {
        plus_col[j] = structural++;
        if (is_free(j))
            minus_col[j] = structural++;
    }

    std::vector<Sense> senses(problem.senses);
    std::vector<int> row_sign(m, 1);
    Index slacks = 0, artificials = 0;
    for (Index i = 0; i < m; ++i)
    {
        if (problem.rhs(i) < 0)
        {
            row_sign[i] = -1;
            if (senses[i] == Sense::less_equal)
                senses[i] = Sense::greater_equal;
            else if (senses[i] == Sense::greater_equal)
                senses[i] = Sense::less_equal;
        }
        if (senses[i] != Sense::equal)
            ++slacks;
        if (senses[i] != Sense::less_equal)
            ++artificials;
    }

    const Index cols = structural + slacks + artificials;
    RatMatrix t = RatMatrix::Zero(m, cols + 1);
    std::vector<Index> basis(m);
    std::vector<bool> is_artificial(cols, false);
    Index next_slack = structural, next_art = structural + slacks;
    for (Index i = 0; i < m; ++i)
    {
        const Rational s = row_sign[i];
        for (Index j = 0; j < nv; ++j)
        {
            const Rational& a = problem.constraints(i, j);
            if (a == 0)
                continue;
            t(i, plus_col[j]) = s * a;
            if (minus_col[j] >= 0)
                t(i, minus_col[j]) = -s * a;
        }
        t(i, cols) = s * problem.rhs(i);
        if (senses[i] == Sense::less_equal)
        {
            t(i, next_slack) = 1;
            basis[i] = next_slack++;
        }
        else
        {
            if (senses[i] == Sense::greater_equal)
                t(i, next_slack++) = -1;
            t(i, next_art) = 1;
            is_artificial[next_art] = true;
            basis[i] = next_art++;
        }
    }

    Tableau tab(std::move(t), std::move(basis));
    LpOutcome out;

    if (artificials > 0)
    {
        RatVector phase1 = RatVector::Zero(cols);
        for (Index j = 0; j < cols; ++j)
            if (is_artificial[j])
                phase1(j) = -1;
        tab.set_objective(phase1);
        tab.optimize(std::vector<bool>(cols, true));
        if (tab.value() < 0)
        {
            out.status = LpStatus::infeasible;
            return out;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (Index i = 0; i < tab.rows();)
        {
            if (!is_artificial[tab.basis()[i]])
            {
                ++i;
                continue;
            }
            Index e = -1;
            for (Index j = 0; j < cols; ++j)
            {
                if (!is_artificial[j] && tab.table()(i, j) != 0)
                {
                    e = j;
                    break;
                }
            }
            if (e >= 0)
            {
                tab.pivot(i, e);
                ++i;
            }
            else
            {
                tab.drop_row(i);
            }
        }
    }

    RatVector cost = RatVector::Zero(cols);
    for (Index j = 0; j < nv; ++j)
    {
        cost(plus_col[j]) = problem.objective(j);
        if (minus_col[j] >= 0)
            cost(minus_col[j]) = -problem.objective(j);
    }
    tab.set_objective(cost);
    std::vector<bool> allowed(cols);
    for (Index j = 0; j < cols; ++j)
        allowed[j] = !is_artificial[j];
    if (!tab.optimize(allowed))
    {
        out.status = LpStatus::unbounded;
        return out;
    }

    RatVector column_value = RatVector::Zero(cols);
    for (Index i = 0; i < tab.rows(); ++i)
        column_value(tab.basis()[i]) = tab.table()(i, tab.columns());
    out.point.resize(nv);
    for (Index j = 0; j < nv; ++j)
    {
        out.point(j) = column_value(plus_col[j]);
        if (minus_col[j] >= 0)
            out.point(j) -= column_value(minus_col[j]);
    }
    out.status = LpStatus::optimal;
    out.value = problem.objective.dot(out.point);
    return out;
}

bool satisfies(const LpProblem& problem, const RatVector& x)
{
    if (x.size() != problem.objective.size())
        return false;
    for (Index j = 0; j < x.size(); ++j)
    {
        bool free = !problem.free_variable.empty() && problem.free_variable[j];
        if (!free && x(j) < 0)
            return false;
    }
    for (Index i = 0; i < problem.constraints.rows(); ++i)
    {
        Rational lhs = problem.constraints.row(i).dot(x);
        switch (problem.senses[i])
        {
            case Sense::less_equal:
                if (lhs > problem.rhs(i))
                    return false;
                break;
            case Sense::equal:
                if (lhs != problem.rhs(i))
                    return false;
                break;
            case Sense::greater_equal:
                if (lhs < problem.rhs(i))
                    return false;
                break;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// HullSum

HullSum::HullSum(RatMatrix generators, std::vector<Index> block_sizes)
    : generators_(std::move(generators)), blocks_(std::move(block_sizes))
{
    if (blocks_.empty())
        throw PreconditionError("HullSum: at least one block is required");
    Index total = 0;
    for (Index b : blocks_)
    {
        if (b <= 0)
            throw PreconditionError("HullSum: empty block");
        total += b;
    }
    if (total != generators_.cols())
        throw PreconditionError("HullSum: block sizes do not cover the generators");
}

HullSum HullSum::hull(const RatMatrix& points)
{
    return HullSum(points, {points.cols()});
}

HullSum HullSum::scaled(const Rational& factor) const
{
    RatMatrix g = generators_;
    for (Index i = 0; i < g.rows(); ++i)
        for (Index j = 0; j < g.cols(); ++j)
            g(i, j) *= factor;
    return HullSum(std::move(g), blocks_);
}

Index HullSum::dimension() const
{
    std::vector<RatVector> diffs;
    Index start = 0;
    for (Index b : blocks_)
    {
        for (Index k = 1; k < b; ++k)
            diffs.push_back(generators_.col(start + k) - generators_.col(start));
        start += b;
    }
    RatMatrix m(ambient_dim(), static_cast<Index>(diffs.size()));
    for (std::size_t j = 0; j < diffs.size(); ++j)
        m.col(static_cast<Index>(j)) = diffs[j];
    return rank(m);
}

Rational HullSum::support(const RatVector& dir) const
{
    Rational total = 0;
    Index start = 0;
    for (Index b : blocks_)
    {
        Rational best = dir.dot(generators_.col(start));
        for (Index k = 1; k < b; ++k)
        {
            Rational v = dir.dot(generators_.col(start + k));
            if (v > best)
                best = v;
        }
        total += best;
        start += b;
    }
    return total;
}

namespace {

// Constraint rows "entries of each block sum to one" over the first N columns.
void append_block_rows(LpProblem& lp, Index first_row, const std::vector<Index>& blocks)
{
    Index start = 0;
    Index row = first_row;
    for (Index b : blocks)
    {
        for (Index k = 0; k < b; ++k)
            lp.constraints(row, start + k) = 1;
        lp.rhs(row) = 1;
        lp.senses[row] = Sense::equal;
        start += b;
        ++row;
    }
}

LpProblem body_problem(const HullSum& body, Index extra_vars,
                       const std::vector<std::pair<Index, Rational>>& fixed)
{
    const Index n_gen = body.generators().cols();
    const Index nb = static_cast<Index>(body.block_sizes().size());
    const Index nf = static_cast<Index>(fixed.size());
    LpProblem lp;
    lp.objective = RatVector::Zero(n_gen + extra_vars);
    lp.constraints = RatMatrix::Zero(nf + nb, n_gen + extra_vars);
    lp.senses.assign(nf + nb, Sense::equal);
    lp.rhs = RatVector::Zero(nf + nb);
    for (Index r = 0; r < nf; ++r)
    {
        lp.constraints.row(r).head(n_gen) = body.generators().row(fixed[r].first);
        lp.rhs(r) = fixed[r].second;
    }
    append_block_rows(lp, nf, body.block_sizes());
    return lp;
}

}  // namespace

bool HullSum::contains(const RatVector& x) const
{
    if (x.size() != ambient_dim())
        throw PreconditionError("contains: point dimension mismatch");
    std::vector<std::pair<Index, Rational>> fixed;
    for (Index i = 0; i < x.size(); ++i)
        fixed.emplace_back(i, x(i));
    return lp_solve(body_problem(*this, 0, fixed)).status == LpStatus::optimal;
}

std::optional<std::pair<Rational, Rational>>
HullSum::coordinate_range(Index coord, const std::vector<std::pair<Index, Rational>>& fixed) const
{
    LpProblem lp = body_problem(*this, 0, fixed);
    lp.objective = generators_.row(coord).transpose();
    LpOutcome hi = lp_solve(lp);
    if (hi.status != LpStatus::optimal)
        return std::nullopt;
    lp.objective = -lp.objective;
    LpOutcome lo = lp_solve(lp);
    return std::make_pair(-lo.value, hi.value);
}

std::optional<Rational> HullSum::max_scaling(const RatVector& z) const
{
    if (z.size() != ambient_dim())
        throw PreconditionError("max_scaling: vector dimension mismatch");
    const Index n = ambient_dim();
    const Index n_gen = generators_.cols();
    const Index nb = static_cast<Index>(blocks_.size());
    LpProblem lp;
    lp.objective = RatVector::Zero(n_gen + 1);
    lp.objective(n_gen) = 1;
    lp.constraints = RatMatrix::Zero(n + nb, n_gen + 1);
    lp.constraints.topLeftCorner(n, n_gen) = generators_;
    lp.constraints.col(n_gen).head(n) = -z;
    lp.senses.assign(n + nb, Sense::equal);
    lp.rhs = RatVector::Zero(n + nb);
    append_block_rows(lp, n, blocks_);
    LpOutcome out = lp_solve(lp);
    if (out.status == LpStatus::unbounded)
        return std::nullopt;
    if (out.status == LpStatus::infeasible)
        throw PreconditionError("max_scaling: the body does not contain the origin");
    return out.value;
}

std::pair<IntVector, IntVector> integer_box(const HullSum& body)
{
    const Index n = body.ambient_dim();
    IntVector lo(n), hi(n);
    for (Index i = 0; i < n; ++i)
    {
        RatVector e = RatVector::Zero(n);
        e(i) = 1;
        hi(i) = floor_of(body.support(e));
        e(i) = -1;
        lo(i) = ceil_of(-body.support(e));
    }
    return {lo, hi};
}

namespace {

class LatticeScan
{
    public:
        LatticeScan(const HullSum& body, const EnumerationLimits& limits)
            : body_(body), point_(IntVector::Zero(body.ambient_dim()))
        {
            const Index n = body.ambient_dim();
            std::tie(lo_, hi_) = integer_box(body);
            empty_ = false;
            Integer volume = 1;
            for (Index i = 0; i < n; ++i)
            {
                if (lo_(i) > hi_(i))
                {
                    empty_ = true;
                    return;
                }
                volume *= hi_(i) - lo_(i) + 1;
            }
            if (volume > limits.max_box)
                throw LimitExceeded("lattice point scan: bounding box holds " + volume.str() +
                                    " points, above the cap of " + limits.max_box.str());
            order_.resize(n);
            std::iota(order_.begin(), order_.end(), Index{0});
            std::stable_sort(order_.begin(), order_.end(), [&](Index a, Index b) {
                return hi_(a) - lo_(a) < hi_(b) - lo_(b);
            });
        }

        // `visit` null means count only.
        Integer run(const std::function<void(const IntVector&)>* visit)
        {
            if (empty_ || body_.ambient_dim() == 0)
                return 0;
            visit_ = visit;
            count_ = 0;
            scan(0);
            return count_;
        }

    private:
        void scan(std::size_t level)
        {
            const Index coord = order_[level];
            Integer a, b;
            if (level == 0)
            {
                a = lo_(coord);
                b = hi_(coord);
            }
            else
            {
                auto range = body_.coordinate_range(coord, fixed_);
                if (!range)
                    return;
                a = ceil_of(range->first);
                b = floor_of(range->second);
            }
            if (a > b)
                return;
            const bool innermost = level + 1 == order_.size();
            if (innermost && visit_ == nullptr)
            {
                count_ += b - a + 1;
                return;
            }
            for (Integer v = a; v <= b; ++v)
            {
                point_(coord) = v;
                if (innermost)
                {
                    ++count_;
                    (*visit_)(point_);
                    continue;
                }
                fixed_.emplace_back(coord, Rational(v));
                scan(level + 1);
                fixed_.pop_back();
            }
        }

        const HullSum& body_;
        IntVector lo_, hi_;
        bool empty_ = true;
        std::vector<Index> order_;
        std::vector<std::pair<Index, Rational>> fixed_;
        IntVector point_;
        const std::function<void(const IntVector&)>* visit_ = nullptr;
        Integer count_;
};

}  // namespace

void for_each_lattice_point(const HullSum& body, const EnumerationLimits& limits,
                            const std::function<void(const IntVector&)>& visit)
{
    LatticeScan scan(body, limits);
    scan.run(&visit);
}

Integer count_lattice_points(const HullSum& body, const EnumerationLimits& limits)
{
    LatticeScan scan(body, limits);
    return scan.run(nullptr);
}

bool membership(const VPolytope& p, const RatVector& x)
{
    return HullSum::hull(p).contains(x);
}

Rational support_bound(const VPolytope& p, const IntVector& direction)
{
    if (direction.size() != p.ambient_dim())
        throw PreconditionError("support_bound: direction dimension mismatch");
    return HullSum::hull(p).support(to_rational(direction));
}

// ---------------------------------------------------------------------------
// GaugeBody

namespace {

void require_full_dimensional(const HullSum& body, const char* what)
{
    if (body.dimension() != body.ambient_dim())
        throw PreconditionError(std::string(what) + ": body is not full-dimensional");
}

}  // namespace

GaugeBody GaugeBody::symmetric(const VPolytope& p)
{
    HullSum body = HullSum::hull(p);
    require_full_dimensional(body, "symmetric gauge");
    const RatMatrix& pts = p.points();
    for (Index j = 0; j < pts.cols(); ++j)
    {
        RatVector neg = -pts.col(j);
        bool listed = false;
        for (Index k = 0; k < pts.cols() && !listed; ++k)
            listed = pts.col(k) == neg;
        if (!listed && !body.contains(neg))
            throw PreconditionError("symmetric gauge: body is not 0-symmetric");
    }
    return GaugeBody(std::move(body));
}

GaugeBody GaugeBody::difference(const VPolytope& p)
{
    require_full_dimensional(HullSum::hull(p), "difference body");
    const Index v = p.point_count();
    RatMatrix g(p.ambient_dim(), 2 * v);
    g << p.points(), -p.points();
    return GaugeBody(HullSum(std::move(g), {v, v}));
}

GaugeBody GaugeBody::from_symmetric_body(HullSum body)
{
    require_full_dimensional(body, "gauge body");
    return GaugeBody(std::move(body));
}

Rational GaugeBody::gauge(const RatVector& z) const
{
    if (z.size() != ambient_dim())
        throw PreconditionError("gauge: vector dimension mismatch");
    if ((z.array() == Rational(0)).all())
        throw PreconditionError("gauge: zero vector");
    std::optional<Rational> mu = body_.max_scaling(z);
    if (!mu || *mu == 0)
        throw PreconditionError("gauge: degenerate body");
    return 1 / *mu;
}

Rational GaugeBody::gauge(const IntVector& z) const
{
    return gauge(to_rational(z));
}

GaugeBody GaugeBody::scaled(const Rational& factor) const
{
    if (factor <= 0)
        throw PreconditionError("gauge body: scale factor must be positive");
    return GaugeBody(body_.scaled(factor));
}

Rational gauge(const GaugeBody& body, const IntVector& z)
{
    return body.gauge(z);
}

}  // namespace latpoly
