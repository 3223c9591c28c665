#include "bct/behavior.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bct {

namespace {

std::vector<int> indices_of(const std::vector<std::string>& vars,
                            const std::vector<std::string>& names) {
    std::vector<int> idx;
    for (const auto& n : names) {
        auto it = std::find(vars.begin(), vars.end(), n);
        if (it == vars.end()) throw std::invalid_argument("unknown variable: " + n);
        idx.push_back(static_cast<int>(it - vars.begin()));
    }
    return idx;
}

}  // namespace

Behavior::Behavior(PolyMatrix r, std::vector<std::string> v) : rep(std::move(r)), vars(std::move(v)) {
    if (rep.cols() != static_cast<int>(vars.size()))
        throw std::invalid_argument("behavior: vars/columns mismatch");
}

Behavior Behavior::full(std::vector<std::string> vars) {
    return {PolyMatrix(0, static_cast<int>(vars.size())), std::move(vars)};
}

int num_outputs(const Behavior& b) { return rank(b.rep); }

Behavior minimal_rep(const Behavior& b) {
    auto h = hermite_form(b.rep);
    return {h.H.row_range(0, h.rank()), b.vars};
}

Behavior eliminate(const Behavior& b, const std::vector<std::string>& drop) {
    const auto drop_idx = indices_of(b.vars, drop);
    std::vector<int> keep_idx;
    std::vector<std::string> keep_vars;
    for (int j = 0; j < b.rep.cols(); ++j)
        if (std::find(drop_idx.begin(), drop_idx.end(), j) == drop_idx.end()) {
            keep_idx.push_back(j);
            keep_vars.push_back(b.vars[static_cast<size_t>(j)]);
        }
    // Row-compress the dropped block; the rows where it vanished constrain
    // the kept variables alone.
    const auto h = hermite_form(b.rep.select_cols(drop_idx));
    const PolyMatrix transformed = h.U * b.rep;
    const PolyMatrix kept = transformed.row_range(h.rank(), b.rep.rows()).select_cols(
        std::vector<int>(keep_idx.begin(), keep_idx.end()));
    return minimal_rep(Behavior{kept, keep_vars});
}

bool includes(const Behavior& b1, const Behavior& b2) {
    if (b1.vars != b2.vars) throw std::invalid_argument("includes: variable mismatch");
    // ker R1 is inside ker R2 iff R2 = X * R1 for a minimal R1.
    const Behavior m1 = minimal_rep(b1);
    return solve_left_division(m1.rep, b2.rep).has_value();
}

bool equals(const Behavior& b1, const Behavior& b2) { return includes(b1, b2) && includes(b2, b1); }

Behavior behavior_sum(const Behavior& b1, const Behavior& b2) {
    if (b1.vars != b2.vars) throw std::invalid_argument("behavior_sum: variable mismatch");
    const int n = b1.rep.cols();
    // Over (w, a): R1 w - R1 a = 0 and R2 a = 0; then a is eliminated.
    const PolyMatrix top = PolyMatrix::hstack(b1.rep, -b1.rep);
    const PolyMatrix bottom = PolyMatrix::hstack(PolyMatrix::zero(b2.rep.rows(), n), b2.rep);
    std::vector<std::string> aux_vars = b1.vars;
    std::vector<std::string> aux_names;
    for (int j = 0; j < n; ++j) {
        aux_names.push_back("#aux" + std::to_string(j));
        aux_vars.push_back(aux_names.back());
    }
    Behavior stacked{PolyMatrix::vstack(top, bottom), aux_vars};
    Behavior out = eliminate(stacked, aux_names);
    out.vars = b1.vars;
    return out;
}

Behavior controllable_part(const Behavior& b) {
    const Behavior m = minimal_rep(b);
    if (m.rep.rows() == 0) return m;
    const auto s = smith_form(m.rep);
    // m.rep = U * [Delta 0] * V; dropping Delta keeps the module structure
    // but erases the autonomous (nonunit-divisor) directions.
    return minimal_rep(Behavior{s.V.row_range(0, m.rep.rows()), b.vars});
}

std::vector<std::string> irrelevant_columns(const Behavior& b) {
    const Behavior m = minimal_rep(b);
    std::vector<std::string> out;
    for (int j = 0; j < m.rep.cols(); ++j)
        if (m.rep.col_is_zero(j)) out.push_back(m.vars[static_cast<size_t>(j)]);
    return out;
}

std::optional<IoPartition> io_partition(const Behavior& b,
                                        const std::vector<std::string>& desired_inputs) {
    const auto forced = indices_of(b.vars, desired_inputs);
    const Behavior m = minimal_rep(b);
    const int p = m.rep.rows();
    std::vector<int> candidates;
    for (int j = 0; j < m.rep.cols(); ++j)
        if (std::find(forced.begin(), forced.end(), j) == forced.end()) candidates.push_back(j);
    if (p > static_cast<int>(candidates.size())) return std::nullopt;

    // First (lexicographically) size-p column subset that is nonsingular.
    std::vector<int> pick(static_cast<size_t>(p));
    std::function<bool(int, int)> search = [&](int pos, int start) {
        if (pos == p) return rank(m.rep.select_cols(pick)) == p;
        for (int k = start; k <= static_cast<int>(candidates.size()) - (p - pos); ++k) {
            pick[static_cast<size_t>(pos)] = candidates[static_cast<size_t>(k)];
            if (search(pos + 1, k + 1)) return true;
        }
        return false;
    };
    if (!search(0, 0)) return std::nullopt;

    IoPartition part;
    for (int j = 0; j < m.rep.cols(); ++j) {
        if (std::find(pick.begin(), pick.end(), j) != pick.end())
            part.outputs.push_back(m.vars[static_cast<size_t>(j)]);
        else
            part.inputs.push_back(m.vars[static_cast<size_t>(j)]);
    }
    return part;
}

}  // namespace bct
