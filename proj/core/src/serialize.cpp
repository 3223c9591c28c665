#include "bct/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace bct {

namespace {

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of strings");
    std::vector<Rational> coeffs;
    for (const auto& e : j) {
        if (e.is_string())
            coeffs.push_back(rational_from_string(e.get<std::string>()));
        else if (e.is_number_integer())
            coeffs.push_back(Rational(e.get<long>()));
        else
            throw std::invalid_argument("polynomial coefficient must be a string or integer");
    }
    return Poly(std::move(coeffs));
}

json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

PolyMatrix matrix_from_json(const json& j, int cols_hint) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<Poly>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Poly> row;
        for (const auto& e : r) row.push_back(poly_from_json(e));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return PolyMatrix::zero(0, cols_hint < 0 ? 0 : cols_hint);
    return PolyMatrix::of(std::move(rows));
}

json behavior_to_json(const Behavior& b) {
    return json{{"vars", b.vars}, {"rep", matrix_to_json(b.rep)}};
}

Behavior behavior_from_json(const json& j) {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    return {matrix_from_json(j.at("rep"), static_cast<int>(vars.size())), vars};
}

ProblemFile problem_from_json(const json& j) {
    ProblemFile pf;
    ControlProblem& p = pf.problem;
    p.w_vars = j.at("w_vars").get<std::vector<std::string>>();
    p.c_vars = j.at("c_vars").get<std::vector<std::string>>();
    p.R = matrix_from_json(j.at("R"), static_cast<int>(p.w_vars.size()));
    p.M = matrix_from_json(j.at("M"), static_cast<int>(p.c_vars.size()));
    p.S = matrix_from_json(j.at("S"), static_cast<int>(p.w_vars.size()));
    if (j.contains("declared_outputs"))
        p.declared_outputs = j.at("declared_outputs").get<std::vector<std::string>>();
    if (j.contains("controller"))
        pf.controller = matrix_from_json(j.at("controller"), static_cast<int>(p.c_vars.size()));
    if (j.contains("options") && j.at("options").contains("max_degree"))
        pf.max_degree = j.at("options").at("max_degree").get<int>();

    // Name uniqueness across both variable groups.
    std::vector<std::string> all = p.w_vars;
    all.insert(all.end(), p.c_vars.begin(), p.c_vars.end());
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = a + 1; b < all.size(); ++b)
            if (all[a] == all[b]) throw std::invalid_argument("duplicate variable name: " + all[a]);
    p.validate();
    return pf;
}

json problem_to_json(const ProblemFile& pf) {
    const ControlProblem& p = pf.problem;
    json j{{"w_vars", p.w_vars}, {"c_vars", p.c_vars},  {"R", matrix_to_json(p.R)},
           {"M", matrix_to_json(p.M)}, {"S", matrix_to_json(p.S)}};
    if (!p.declared_outputs.empty()) j["declared_outputs"] = p.declared_outputs;
    if (pf.controller) j["controller"] = matrix_to_json(*pf.controller);
    j["options"] = json{{"max_degree", pf.max_degree}};
    return j;
}

ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("syntax error at byte " + std::to_string(e.byte) + ": " +
                                    e.what());
    }
    return problem_from_json(j);
}

std::string serialize_problem(const ProblemFile& pf) { return problem_to_json(pf).dump(2) + "\n"; }

std::string matrix_pretty(const PolyMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "[" : " [");
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << m.at(i, j).str();
        }
        out << "]";
        if (i + 1 < m.rows()) out << "\n";
    }
    out << "]";
    return out.str();
}

}  // namespace bct
