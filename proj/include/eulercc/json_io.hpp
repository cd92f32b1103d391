#ifndef EULERCC_JSON_IO_HPP
#define EULERCC_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "constructible.hpp"
#include "fixtures.hpp"

namespace eulercc {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q)
{
    return to_string(q);
}

inline Json to_json(const RatVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline Rational rational_from_json(const Json& j, const std::string& where)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

inline RatVector vector_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    RatVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline Json parse_json_text(const std::string& text, const std::string& where)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

// ---------------------------------------------------------------------------
// complexes

inline Json complex_to_json(const EmbeddedComplex& k)
{
    Json verts = Json::array();
    for (const auto& v : k.vertices())
        verts.push_back(to_json(v));
    Json simplices = Json::array();
    for (const auto& s : k.simplices())
        simplices.push_back(s);
    return Json{{"ambient_dim", k.ambient_dim()}, {"vertices", verts}, {"simplices", simplices}};
}

inline EmbeddedComplex complex_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices") ||
        !j.contains("simplices"))
        throw InputError("complex: expected an object with ambient_dim, vertices and simplices");
    if (!j["ambient_dim"].is_number_unsigned())
        throw InputError("complex.ambient_dim: expected a non-negative integer");
    const auto dim = j["ambient_dim"].get<std::size_t>();
    std::vector<RatVector> verts;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i)
        verts.push_back(vector_from_json(j["vertices"][i], "complex.vertices[" + std::to_string(i) + "]"));
    std::vector<Simplex> simplices;
    for (std::size_t i = 0; i < j["simplices"].size(); ++i) {
        const auto& s = j["simplices"][i];
        if (!s.is_array())
            throw InputError("complex.simplices[" + std::to_string(i) + "]: expected an array");
        Simplex simplex;
        for (const auto& v : s) {
            if (!v.is_number_unsigned())
                throw InputError("complex.simplices[" + std::to_string(i) +
                                 "]: vertex ids must be non-negative integers");
            simplex.push_back(v.get<VertexId>());
        }
        simplices.push_back(std::move(simplex));
    }
    const bool close = j.value("close", false);
    return EmbeddedComplex(dim, std::move(verts), std::move(simplices), close);
}

// ---------------------------------------------------------------------------
// constructible functions

inline Json function_to_json(const ConstructibleFunction& a)
{
    Json values = Json::object();
    const auto& k = a.complex();
    for (SimplexId i = 0; i < k.size(); ++i)
        if (a(i) != 0)
            values[simplex_key(k.simplex(i))] = a(i);
    return Json{{"values", values}};
}

inline Simplex parse_simplex_key(const std::string& key)
{
    Simplex s;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed simplex key \"" + key + "\"");
        s.push_back(std::stoul(part));
    }
    if (s.empty())
        throw InputError("empty simplex key");
    return s;
}

inline ConstructibleFunction function_from_json(const Json& j, const ComplexPtr& k)
{
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw InputError("constructible function: expected {\"values\": {...}}");
    ConstructibleFunction a(k);
    for (const auto& [key, value] : j["values"].items()) {
        if (!value.is_number_integer())
            throw InputError("constructible function value for \"" + key + "\" is not an integer");
        a[k->id_of(parse_simplex_key(key))] = value.get<std::int64_t>();
    }
    return a;
}

// ---------------------------------------------------------------------------
// affine and quadratic functions

inline Json affine_to_json(const AffineFunction& f)
{
    return Json{{"linear", to_json(f.linear)}, {"constant", to_json(f.constant)}};
}

inline Json quad_to_json(const QuadAffineFunction& f)
{
    Json j{{"linear", to_json(f.linear)}, {"constant", to_json(f.constant)}};
    if (!f.is_affine()) {
        Json q = Json::array();
        for (const auto& row : f.quad.entries())
            q.push_back(to_json(row));
        j["quad"] = q;
    }
    return j;
}

inline QuadAffineFunction quad_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("linear"))
        throw InputError("function: expected an object with \"linear\"");
    RatVector lin = vector_from_json(j["linear"], "function.linear");
    Rational c = j.contains("constant") ? rational_from_json(j["constant"], "function.constant")
                                         : Rational(0);
    if (!j.contains("quad"))
        return QuadAffineFunction(AffineFunction{std::move(lin), std::move(c)});
    RatMatrix q;
    for (std::size_t i = 0; i < j["quad"].size(); ++i)
        q.push_back(vector_from_json(j["quad"][i], "function.quad[" + std::to_string(i) + "]"));
    return QuadAffineFunction(std::move(lin), std::move(c), RatSymMatrix(std::move(q)));
}

inline AffineFunction affine_from_json(const Json& j)
{
    const auto f = quad_from_json(j);
    if (!f.is_affine())
        throw InputError("function: expected an affine function (no quadratic part)");
    return {f.linear, f.constant};
}

inline Json fixture_to_json(const Fixture& fx)
{
    Json functions = Json::object();
    for (const auto& [name, f] : fx.functions)
        functions[name] = function_to_json(f);
    Json morse = Json::object();
    for (const auto& [name, f] : fx.morse_inputs)
        morse[name] = affine_to_json(f);
    Json expected = Json::array();
    for (const auto& e : fx.expected)
        expected.push_back({{"operation", e.operation}, {"function", e.function}, {"value", e.value},
                            {"provenance", e.provenance}, {"oracle", e.oracle}});
    Json cases = Json::array();
    for (const auto& c : fx.theorem_cases)
        cases.push_back({{"function", c.function}, {"f", c.morse_input}, {"expected", c.expected}});
    return Json{{"name", fx.name},      {"complex", complex_to_json(*fx.complex)},
                {"functions", functions}, {"morse_inputs", morse},
                {"expected", expected},   {"theorem_cases", cases}};
}

} // namespace eulercc

#endif // EULERCC_JSON_IO_HPP
