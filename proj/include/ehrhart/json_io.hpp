#ifndef EHRHART_JSON_IO_HPP
#define EHRHART_JSON_IO_HPP

#include <string>
#include <vector>

#include "ehrhart/polytope.hpp"
#include "ehrhart/step_function.hpp"

namespace ehrhart {

// Polytope input file: {"name": string, "vertices": [["p/q", ...], ...]}.
// Rationals are strings everywhere in these formats, never floats.
struct PolytopeFile {
    std::string name;
    std::vector<RationalVector> vertices;
};

// Parse failures (bad JSON, wrong shapes, malformed rationals) throw
// std::invalid_argument with a message naming the offending part.
PolytopeFile parse_polytope_json(const std::string& text);
PolytopeFile read_polytope_file(const std::string& path);

// {kind, dim, period, coefficients: [{k, pieces: [{interval, poly}]}]},
// poly as ascending coefficient strings. Output is deterministic (sorted
// keys, fixed indentation, trailing newline) and round-trips exactly.
std::string quasi_to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasi_from_json(const std::string& text);

// {domain, pieces: [{lo, hi, lo_closed, hi_closed, count}]}.
std::string step_function_to_json(const StepFunction& sf);
StepFunction step_function_from_json(const std::string& text);

// {max_dim, points, cells: [{vertices: [indices], dim, on_boundary}]}.
std::string decomposition_to_json(const Decomposition& dec);

}  // namespace ehrhart

#endif
