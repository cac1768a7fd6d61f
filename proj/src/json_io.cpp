#include "ehrhart/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace ehrhart {

namespace {

using nlohmann::json;

// nlohmann keeps object keys sorted, so dump() is deterministic.
std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_field(const json& j, const char* where) {
    if (!j.is_string())
        throw std::invalid_argument(std::string(where) + " must be a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(where) + ": " + e.what());
    }
}

json interval_to_json(const Interval& iv) {
    return json{{"lo", rational_to_string(iv.lo)},
                {"hi", rational_to_string(iv.hi)},
                {"lo_closed", iv.lo_closed},
                {"hi_closed", iv.hi_closed}};
}

Interval interval_from_json(const json& j, const char* where) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi") || !j.contains("lo_closed") ||
        !j.contains("hi_closed"))
        throw std::invalid_argument(std::string(where) +
                                    " must have lo, hi, lo_closed, hi_closed");
    if (!j["lo_closed"].is_boolean() || !j["hi_closed"].is_boolean())
        throw std::invalid_argument(std::string(where) + ": endpoint flags must be booleans");
    return Interval{rational_field(j["lo"], where), rational_field(j["hi"], where),
                    j["lo_closed"].get<bool>(), j["hi_closed"].get<bool>()};
}

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(rational_to_string(c));
    if (coeffs.empty()) coeffs.push_back("0");
    return coeffs;
}

Polynomial polynomial_from_json(const json& j, const char* where) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(where) + " must be a coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_field(c, where));
    return Polynomial(std::move(coeffs));
}

KindFlag kind_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "closed") return KindFlag::closed;
        if (s == "open") return KindFlag::open;
    }
    throw std::invalid_argument("kind must be \"closed\" or \"open\"");
}

}  // namespace

PolytopeFile parse_polytope_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("vertices"))
        throw std::invalid_argument("polytope file must be an object with a vertices array");
    PolytopeFile out;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::invalid_argument("name must be a string");
        out.name = j["name"].get<std::string>();
    }
    const json& verts = j["vertices"];
    if (!verts.is_array() || verts.empty())
        throw std::invalid_argument("vertices must be a non-empty array");
    for (const auto& v : verts) {
        if (!v.is_array() || v.empty())
            throw std::invalid_argument("each vertex must be a non-empty coordinate array");
        RationalVector coords;
        for (const auto& c : v) coords.push_back(rational_field(c, "vertex coordinate"));
        out.vertices.push_back(std::move(coords));
    }
    return out;
}

PolytopeFile read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_polytope_json(buffer.str());
}

std::string quasi_to_json(const QuasiPolynomial& qp) {
    json coeffs = json::array();
    for (std::size_t k = 0; k < qp.coefficients.size(); ++k) {
        json pieces = json::array();
        for (const auto& piece : qp.coefficients[k].pieces())
            pieces.push_back(json{{"interval", interval_to_json(piece.interval)},
                                  {"poly", polynomial_to_json(piece.poly)}});
        coeffs.push_back(json{{"k", k}, {"pieces", std::move(pieces)}});
    }
    const json j{{"kind", qp.kind == KindFlag::closed ? "closed" : "open"},
                 {"dim", qp.dim},
                 {"period", rational_to_string(qp.period)},
                 {"coefficients", std::move(coeffs)}};
    return dump(j);
}

QuasiPolynomial quasi_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("kind") || !j.contains("dim") || !j.contains("period") ||
        !j.contains("coefficients"))
        throw std::invalid_argument(
            "quasi-polynomial must have kind, dim, period, coefficients");
    QuasiPolynomial out;
    out.kind = kind_from_json(j["kind"]);
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 0)
        throw std::invalid_argument("dim must be a nonnegative integer");
    out.dim = j["dim"].get<int>();
    out.period = rational_field(j["period"], "period");
    const json& coeffs = j["coefficients"];
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(out.dim) + 1)
        throw std::invalid_argument("coefficients must list k = 0 .. dim");
    out.coefficients.reserve(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const json& entry = coeffs[k];
        if (!entry.is_object() || !entry.contains("k") || !entry.contains("pieces") ||
            !entry["k"].is_number_integer() ||
            entry["k"].get<std::size_t>() != k)
            throw std::invalid_argument("coefficient entries must carry k = 0 .. dim in order");
        std::vector<PolyPiece> pieces;
        for (const auto& pj : entry["pieces"]) {
            if (!pj.is_object() || !pj.contains("interval") || !pj.contains("poly"))
                throw std::invalid_argument("each piece must have interval and poly");
            pieces.push_back(PolyPiece{interval_from_json(pj["interval"], "piece interval"),
                                       polynomial_from_json(pj["poly"], "piece poly")});
        }
        try {
            out.coefficients.emplace_back(out.period, out.kind, std::move(pieces));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("coefficient " + std::to_string(k) + ": " + e.what());
        }
    }
    return out;
}

std::string step_function_to_json(const StepFunction& sf) {
    json pieces = json::array();
    for (const auto& piece : sf.pieces()) {
        json record = interval_to_json(piece.interval);
        record["count"] = piece.count;
        pieces.push_back(std::move(record));
    }
    const json j{{"domain", interval_to_json(sf.domain())}, {"pieces", std::move(pieces)}};
    return dump(j);
}

StepFunction step_function_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("domain") || !j.contains("pieces"))
        throw std::invalid_argument("step function must have domain and pieces");
    const Interval domain = interval_from_json(j["domain"], "domain");
    std::vector<StepPiece> pieces;
    for (const auto& pj : j["pieces"]) {
        if (!pj.is_object() || !pj.contains("count") || !pj["count"].is_number_integer())
            throw std::invalid_argument("each step piece must have an integer count");
        pieces.push_back(
            StepPiece{interval_from_json(pj, "step piece"), pj["count"].get<std::int64_t>()});
    }
    return StepFunction(domain, std::move(pieces));
}

std::string decomposition_to_json(const Decomposition& dec) {
    json points = json::array();
    for (const auto& p : dec.points) {
        json coords = json::array();
        for (const auto& c : p) coords.push_back(rational_to_string(c));
        points.push_back(std::move(coords));
    }
    json cells = json::array();
    for (std::size_t i = 0; i < dec.cells.size(); ++i) {
        cells.push_back(json{{"vertices", dec.vertex_indices[i]},
                             {"dim", dec.cells[i].simplex.dim()},
                             {"on_boundary", dec.cells[i].on_boundary}});
    }
    const json j{{"max_dim", dec.max_dim}, {"points", std::move(points)},
                 {"cells", std::move(cells)}};
    return dump(j);
}

}  // namespace ehrhart
