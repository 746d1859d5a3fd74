#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "latpoly/conjecture.hpp"
#include "latpoly/lattice_face.hpp"
#include "latpoly/minima.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/zonotope.hpp"

/**
 * JSON documents.
 *
 *   polytope: {"ambient_dim": n, "vertices": [[x, ...], ...]}
 *   zonotope: {"ambient_dim": n, "generators": [[v, ...], ...]}
 *
 * Coordinates are JSON integers or "p/q" strings; output always writes
 * integers as numbers and other rationals as "p/q" strings. Rationals in
 * reports are always strings.
 */
namespace latpoly::io {

using json = nlohmann::json;

class ParseError : public std::runtime_error
{
    public:
        explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

json parse(const std::string& text);

Rational rational_from_json(const json& value);
json coordinate_json(const Rational& q);
json rational_json(const Rational& q);

VPolytope polytope_from_json(const json& doc);
Zonotope zonotope_from_json(const json& doc);
/// Dispatches on the presence of "vertices" or "generators".
std::variant<VPolytope, Zonotope> body_from_json(const json& doc);

json to_json(const VPolytope& p);
json to_json(const Zonotope& z);
json to_json(const EhrhartPoly& g);
json to_json(const Polynomial& p);
json to_json(const MinimaResult& m);
json to_json(const BoundReport& r);
json to_json(const LatticeFaceReport& r);
json to_json(const std::vector<LiuRow>& rows);

}  // namespace latpoly::io
