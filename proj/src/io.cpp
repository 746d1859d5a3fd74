#include "latpoly/io.hpp"

#include <limits>

namespace latpoly::io {

json parse(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_from_json(const json& value)
{
    if (value.is_number_integer())
        return Rational(value.get<long long>());
    if (value.is_string())
    {
        try
        {
            return parse_rational(value.get<std::string>());
        }
        catch (const std::invalid_argument& e)
        {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer or a \"p/q\" string, got " + value.dump());
}

json coordinate_json(const Rational& q)
{
    if (denominator(q) == 1 && numerator(q) >= std::numeric_limits<long long>::min() &&
        numerator(q) <= std::numeric_limits<long long>::max())
        return numerator(q).convert_to<long long>();
    return to_string(q);
}

json rational_json(const Rational& q)
{
    return to_string(q);
}

namespace {

RatMatrix read_points(const json& doc, const char* key)
{
    if (!doc.is_object())
        throw ParseError("expected a JSON object");
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
        throw ParseError("missing integer \"ambient_dim\"");
    const long long n = doc["ambient_dim"].get<long long>();
    if (n < 1)
        throw ParseError("\"ambient_dim\" must be positive");
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError(std::string("missing array \"") + key + "\"");
    const json& rows = doc[key];
    RatMatrix pts(n, static_cast<Index>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
    {
        if (!rows[j].is_array() || static_cast<long long>(rows[j].size()) != n)
            throw ParseError(std::string("entry ") + std::to_string(j) + " of \"" + key + "\" must have " +
                             std::to_string(n) + " coordinates");
        for (long long i = 0; i < n; ++i)
            pts(i, static_cast<Index>(j)) = rational_from_json(rows[j][static_cast<std::size_t>(i)]);
    }
    return pts;
}

json point_rows(const RatMatrix& pts)
{
    json rows = json::array();
    for (Index j = 0; j < pts.cols(); ++j)
    {
        json row = json::array();
        for (Index i = 0; i < pts.rows(); ++i)
            row.push_back(coordinate_json(pts(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json rational_array(const std::vector<Rational>& values)
{
    json out = json::array();
    for (const Rational& v : values)
        out.push_back(rational_json(v));
    return out;
}

}  // namespace

VPolytope polytope_from_json(const json& doc)
{
    RatMatrix pts = read_points(doc, "vertices");
    if (pts.cols() == 0)
        throw ParseError("\"vertices\" must not be empty");
    return VPolytope(std::move(pts));
}

Zonotope zonotope_from_json(const json& doc)
{
    RatMatrix pts = read_points(doc, "generators");
    if (!is_integral(pts))
        throw ParseError("zonotope generators must be integer vectors");
    return Zonotope(to_integer(pts));
}

std::variant<VPolytope, Zonotope> body_from_json(const json& doc)
{
    if (doc.is_object() && doc.contains("generators"))
        return zonotope_from_json(doc);
    return polytope_from_json(doc);
}

json to_json(const VPolytope& p)
{
    return {{"ambient_dim", p.ambient_dim()}, {"vertices", point_rows(p.points())}};
}

json to_json(const Zonotope& z)
{
    return {{"ambient_dim", z.ambient_dim()}, {"generators", point_rows(to_rational(z.generators()))}};
}

json to_json(const EhrhartPoly& g)
{
    return rational_array(g.coefficients);
}

json to_json(const Polynomial& p)
{
    return rational_array(p);
}

json to_json(const MinimaResult& m)
{
    RatMatrix w(m.witnesses.empty() ? 0 : m.witnesses.front().size(), static_cast<Index>(m.witnesses.size()));
    for (std::size_t j = 0; j < m.witnesses.size(); ++j)
        w.col(static_cast<Index>(j)) = to_rational(m.witnesses[j]);
    return {{"lambdas", rational_array(m.lambdas)}, {"witnesses", point_rows(w)}};
}

json to_json(const BoundReport& r)
{
    json bounds = json::array();
    for (const BoundRecord& b : r.records)
        bounds.push_back({{"i", b.i}, {"name", b.name}, {"g", rational_json(b.g)},
                          {"bound", rational_json(b.bound)}, {"holds", b.holds}});
    return {
        {"ehrhart", to_json(r.ehrhart)},
        {"minima", to_json(r.difference_minima)},
        {"sigma", rational_array(r.sigmas)},
        {"bounds", std::move(bounds)},
        {"sigma_holds", r.sigma_holds},
        {"floor_conjecture",
         {{"bound", r.floor.bound.str()}, {"count", r.floor.count.str()}, {"holds", r.floor.holds}}},
        {"L", {{"value", rational_json(r.l_value)}, {"holds", r.l_holds}}},
    };
}

json to_json(const LatticeFaceReport& r)
{
    json out = {{"lattice_face", r.is_lattice_face},
                {"vertices", point_rows(r.vertices.points())},
                {"subsets_checked", r.subsets_checked}};
    if (!r.is_lattice_face)
    {
        json subset = json::array();
        for (Index j : r.failing_subset)
            subset.push_back(point_rows(RatMatrix(r.vertices.points().col(j)))[0]);
        out["failure"] = {{"kind", to_string(r.failure_kind)}, {"dimension", r.failing_dim}, {"subset", subset}};
    }
    return out;
}

json to_json(const std::vector<LiuRow>& rows)
{
    json out = json::array();
    for (const LiuRow& row : rows)
        out.push_back({{"i", row.i}, {"g", rational_json(row.coefficient)},
                       {"projected_volume", rational_json(row.projected_volume)}, {"equal", row.equal}});
    return out;
}

}  // namespace latpoly::io
