#ifndef BCT_SERIALIZE_HPP
#define BCT_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "bct/control.hpp"

namespace bct {

using json = nlohmann::json;

/// Wire format: a polynomial is an array of coefficient strings in ascending
/// degree ("-1", "3/2", ...); a matrix is an array of rows of polynomials;
/// a problem file carries w_vars/c_vars/R/M/S and optional declared_outputs
/// and options.

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json matrix_to_json(const PolyMatrix& m);
/// Shape hints let 0-row matrices keep a column count.
PolyMatrix matrix_from_json(const json& j, int cols_hint = -1);

json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const json& j);

struct ProblemFile {
    ControlProblem problem;
    std::optional<PolyMatrix> controller;  // used by the verify command
    int max_degree = 64;
};

ProblemFile problem_from_json(const json& j);
json problem_to_json(const ProblemFile& pf);

/// Parse with positional syntax errors and dimension validation.
ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& pf);

/// Human-readable rendering ("x^2 - x").
std::string matrix_pretty(const PolyMatrix& m);

}  // namespace bct

#endif
