#include "bct/iopart.hpp"

#include <algorithm>
#include <stdexcept>

namespace bct {

bool is_input_selectable(const PartitionedControllerSpec& spec) {
    return rank(spec.C1) == spec.C1.rows();
}

std::optional<PolyMatrix> construct_fullrank_V(const PolyMatrix& c, const PolyMatrix& p) {
    if (c.cols() != p.cols()) throw std::invalid_argument("construct_fullrank_V: column mismatch");
    const int crows = c.rows(), prows = p.rows();
    if (rank(PolyMatrix::vstack(p, c)) < crows) return std::nullopt;
    if (rank(c) == crows) return PolyMatrix::zero(crows, prows);

    // Coordinates where P becomes its Smith form D = [P1 0; 0 0].
    const auto s = smith_form(p);
    const auto diag = s.diagonal();
    int pprime = 0;
    for (const auto& d : diag)
        if (!d.is_zero()) ++pprime;
    const PolyMatrix chat = c * s.Vinv;

    // Left-transform chat to [[C11 C12]; [C21 0]; [0 0]] against the column
    // split (first pprime | rest).
    std::vector<int> right_cols, left_cols;
    for (int j = 0; j < c.cols(); ++j) (j < pprime ? left_cols : right_cols).push_back(j);
    const auto hb = hermite_form(chat.select_cols(right_cols));
    const int cprime = hb.rank();
    const PolyMatrix stage1 = hb.U * chat;
    const auto ha = hermite_form(stage1.row_range(cprime, crows).select_cols(left_cols));
    const int cdprime = ha.rank();
    const PolyMatrix c21 = ha.H.row_range(0, cdprime);

    // N: greedy nonsingular column subset of C21 (first nonsingular minor in
    // column order).
    std::vector<int> nset;
    for (int j = 0; j < pprime && static_cast<int>(nset.size()) < cdprime; ++j) {
        std::vector<int> trial = nset;
        trial.push_back(j);
        if (rank(c21.select_cols(trial)) == static_cast<int>(trial.size())) nset = trial;
    }

    // Bottom block of the structured W: constant [I 0] spread over the
    // columns outside N.
    const int free_rows = crows - cprime - cdprime;
    PolyMatrix w = PolyMatrix::zero(crows, prows);
    int placed = 0;
    for (int j = 0; j < pprime && placed < free_rows; ++j) {
        if (std::find(nset.begin(), nset.end(), j) != nset.end()) continue;
        w.at(cprime + cdprime + placed, j) = 1;
        ++placed;
    }
    if (placed < free_rows) return std::nullopt;  // cannot happen when the rank test held

    // Undo the two left transforms and the Smith row transform.
    PolyMatrix linv_w = w;
    {
        // blockdiag(I_cprime, ha.Uinv) applied to the rows below cprime.
        const PolyMatrix bottom = ha.Uinv * w.row_range(cprime, crows);
        for (int i = cprime; i < crows; ++i)
            for (int j = 0; j < prows; ++j) linv_w.at(i, j) = bottom.at(i - cprime, j);
    }
    return hb.Uinv * linv_w * s.Uinv;
}

IopartOutcome solve_io_partition(const ControlProblem& p) {
    const auto c0 = bootstrap_regular_controller(p);
    if (!c0) return {SynthStatus::not_regularly_implementable, std::nullopt};

    std::vector<int> u_idx, y_idx;
    std::vector<std::string> u_vars, y_vars;
    for (int j = 0; j < static_cast<int>(p.c_vars.size()); ++j) {
        const auto& name = p.c_vars[static_cast<size_t>(j)];
        if (std::find(p.declared_outputs.begin(), p.declared_outputs.end(), name) !=
            p.declared_outputs.end()) {
            y_idx.push_back(j);
            y_vars.push_back(name);
        } else {
            u_idx.push_back(j);
            u_vars.push_back(name);
        }
    }

    const Behavior cm = minimal_rep(*c0);
    const Behavior pc = minimal_rep(control_manifest(p));
    const PolyMatrix c1 = cm.rep.select_cols(u_idx), c2 = cm.rep.select_cols(y_idx);
    const PolyMatrix p1 = pc.rep.select_cols(u_idx), p2 = pc.rep.select_cols(y_idx);

    if (rank(PolyMatrix::vstack(c1, p1)) < cm.rep.rows())
        return {SynthStatus::partition_unsatisfiable, std::nullopt};
    const auto v = construct_fullrank_V(c1, p1);
    if (!v) return {SynthStatus::partition_unsatisfiable, std::nullopt};

    const PolyMatrix nc1 = c1 + *v * p1, nc2 = c2 + *v * p2;
    // Reassemble in the original control-variable order.
    PolyMatrix rep(cm.rep.rows(), cm.rep.cols());
    for (size_t k = 0; k < u_idx.size(); ++k)
        for (int i = 0; i < rep.rows(); ++i) rep.at(i, u_idx[k]) = nc1.at(i, static_cast<int>(k));
    for (size_t k = 0; k < y_idx.size(); ++k)
        for (int i = 0; i < rep.rows(); ++i) rep.at(i, y_idx[k]) = nc2.at(i, static_cast<int>(k));

    SynthesisResult res;
    res.controller = Behavior{rep, p.c_vars};
    res.V = *v;
    res.certificate = make_certificate(p, res.controller);
    res.input_selectable = is_input_selectable({nc1, nc2, u_vars, y_vars});
    return {SynthStatus::ok, res};
}

}  // namespace bct
