// Command-line front end: reads a polytope or zonotope JSON document and
// prints exact results as JSON.
//
// Exit codes: 0 success, 2 unparsable input or arguments, 3 precondition
// failure (including enumeration caps), 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latpoly/conjecture.hpp"
#include "latpoly/io.hpp"
#include "latpoly/lattice_face.hpp"
#include "latpoly/minima.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/zonotope.hpp"

using namespace latpoly;
using io::json;

namespace {

struct Common
{
    std::string input;
    std::string inline_json;
    std::string output;
    std::string max_box = "10000000";
};

void add_common(CLI::App* cmd, Common& c)
{
    auto* in = cmd->add_option("--input", c.input, "Read the JSON document from FILE");
    auto* js = cmd->add_option("--json", c.inline_json, "JSON document given inline");
    in->excludes(js);
    cmd->add_option("--output", c.output, "Write the result to FILE instead of stdout");
    cmd->add_option("--max-box", c.max_box, "Cap on the integer points of any scanned box");
}

json read_document(const Common& c)
{
    if (!c.inline_json.empty())
        return io::parse(c.inline_json);
    if (c.input.empty())
        throw io::ParseError("one of --input or --json is required");
    std::ifstream in(c.input);
    if (!in)
        throw io::ParseError("cannot open " + c.input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return io::parse(buffer.str());
}

EnumerationLimits limits_of(const Common& c)
{
    EnumerationLimits limits;
    try
    {
        limits.max_box = Integer(c.max_box);
    }
    catch (const std::exception&)
    {
        throw io::ParseError("--max-box must be an integer");
    }
    if (limits.max_box < 1)
        throw io::ParseError("--max-box must be positive");
    return limits;
}

void write_result(const Common& c, const json& result)
{
    const std::string text = result.dump(2) + "\n";
    if (c.output.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out)
        throw std::runtime_error("cannot write " + c.output);
    out << text;
}

json zero_generator_warnings(const Zonotope& z)
{
    json warnings = json::array();
    for (Index j = 0; j < z.generator_count(); ++j)
        if ((z.generators().col(j).array() == Integer(0)).all())
        {
            std::string msg = "generator " + std::to_string(j) + " is zero and contributes nothing";
            std::cerr << "warning: " << msg << "\n";
            warnings.push_back(msg);
        }
    return warnings;
}

json zonotope_coefficients(const Zonotope& z, const EnumerationLimits& limits)
{
    EhrhartPoly stanley = ehrhart_stanley(z);
    EhrhartPoly geometric = ehrhart_geometric(z);
    json out = {{"dimension", z.dimension()},
                {"stanley", io::to_json(stanley)},
                {"geometric", io::to_json(geometric)},
                {"volume", zonotope_volume(z).str()},
                {"warnings", zero_generator_warnings(z)}};
    bool agree = stanley == geometric;
    if (z.dimension() == z.ambient_dim())
    {
        EhrhartPoly interpolated = ehrhart(as_vpolytope(z), limits);
        out["interpolated"] = io::to_json(interpolated);
        agree = agree && interpolated == stanley;
    }
    out["agree"] = agree;
    if (z.generator_count() >= z.ambient_dim())
        out["general_position"] = is_general_position(z);
    return out;
}

json cmd_ehrhart(const json& doc, const EnumerationLimits& limits)
{
    auto body = io::body_from_json(doc);
    if (auto* z = std::get_if<Zonotope>(&body))
    {
        json detail = zonotope_coefficients(*z, limits);
        return {{"coefficients", detail["stanley"]}, {"agree", detail["agree"]}, {"warnings", detail["warnings"]}};
    }
    return {{"coefficients", io::to_json(ehrhart(std::get<VPolytope>(body), limits))}};
}

json cmd_minima(const json& doc, bool difference, const EnumerationLimits& limits)
{
    auto body = io::body_from_json(doc);
    if (auto* z = std::get_if<Zonotope>(&body))
    {
        if (!difference)
            throw PreconditionError("minima of a zonotope need --difference");
        return io::to_json(successive_minima(z->difference_body(), limits));
    }
    const VPolytope& p = std::get<VPolytope>(body);
    GaugeBody g = difference ? difference_gauge_view(p) : GaugeBody::symmetric(p);
    return io::to_json(successive_minima(g, limits));
}

json cmd_report(const json& doc, const EnumerationLimits& limits)
{
    auto body = io::body_from_json(doc);
    json out;
    if (auto* z = std::get_if<Zonotope>(&body))
    {
        out = io::to_json(coefficient_report(*z, limits));
        out["polytope"] = io::to_json(*z);
        out["warnings"] = zero_generator_warnings(*z);
    }
    else
    {
        const VPolytope& p = std::get<VPolytope>(body);
        out = io::to_json(coefficient_report(p, limits));
        out["polytope"] = io::to_json(p);
    }
    return out;
}

json cmd_latticeface(const json& doc, bool liu, const EnumerationLimits& limits)
{
    VPolytope p = io::polytope_from_json(doc);
    LatticeFaceReport report = check_lattice_face(p);
    json out = io::to_json(report);
    if (liu)
        out["liu"] = report.is_lattice_face ? io::to_json(verify_liu(p, limits)) : json(nullptr);
    return out;
}

json cmd_qfamily(long n, long l, const EnumerationLimits& limits)
{
    QFamilyInstance q = q_family(n, l);
    EhrhartPoly closed = q_family_ehrhart_closed(n, l);
    EhrhartPoly interpolated = ehrhart(q.polytope, limits);
    std::vector<Rational> sigma_closed;
    for (long i = 0; i <= n; ++i)
        sigma_closed.push_back(q_family_sigma_closed(n, l, i));
    std::vector<Rational> recip = reciprocal_difference_minima(q.polytope, limits);
    return {{"n", n},
            {"l", l},
            {"polytope", io::to_json(q.polytope)},
            {"closed_form", io::to_json(closed)},
            {"interpolated", io::to_json(interpolated)},
            {"agree", closed == interpolated},
            {"sigma", io::to_json(sigma_closed)},
            {"sigma_from_minima", io::to_json(elementary_symmetric(recip))},
            {"L_poly", io::to_json(l_polynomial(recip))}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lattice polytope computations"};
    app.require_subcommand(1);

    Common common;
    bool difference = false;
    bool liu = false;
    long qn = 0, ql = 0;

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart coefficients of a polytope or zonotope");
    auto* min = app.add_subcommand("minima", "Successive minima of a symmetric body");
    min->add_flag("--difference", difference, "Use the difference body P - P");
    auto* rep = app.add_subcommand("report", "Coefficients against the minima bounds");
    auto* lf = app.add_subcommand("latticeface", "Lattice-face test");
    lf->add_flag("--verify-liu", liu, "Compare coefficients with projected volumes");
    auto* qf = app.add_subcommand("qfamily", "The family conv{l[-1,1]^(n-1) x {0}, +-e_n}");
    qf->add_option("--n", qn, "Dimension")->required();
    qf->add_option("--l", ql, "Scale")->required();
    auto* zc = app.add_subcommand("zonotope-coeffs", "Zonotope coefficients by both subset formulas");
    for (auto* cmd : {ehr, min, rep, lf, qf, zc})
        add_common(cmd, common);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        EnumerationLimits limits = limits_of(common);
        json result;
        if (*qf)
            result = cmd_qfamily(qn, ql, limits);
        else
        {
            json doc = read_document(common);
            if (*ehr)
                result = cmd_ehrhart(doc, limits);
            else if (*min)
                result = cmd_minima(doc, difference, limits);
            else if (*rep)
                result = cmd_report(doc, limits);
            else if (*lf)
                result = cmd_latticeface(doc, liu, limits);
            else
                result = zonotope_coefficients(io::zonotope_from_json(doc), limits);
        }
        write_result(common, result);
        return 0;
    }
    catch (const io::ParseError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
