#include "bct/control.hpp"

#include <algorithm>
#include <stdexcept>

namespace bct {

namespace {

std::vector<std::string> joined_vars(const ControlProblem& p) {
    std::vector<std::string> v = p.w_vars;
    v.insert(v.end(), p.c_vars.begin(), p.c_vars.end());
    return v;
}

}  // namespace

void ControlProblem::validate() const {
    if (R.rows() != M.rows()) throw std::invalid_argument("R and M must have equal row counts");
    if (R.cols() != static_cast<int>(w_vars.size()))
        throw std::invalid_argument("R columns must match w_vars");
    if (M.cols() != static_cast<int>(c_vars.size()))
        throw std::invalid_argument("M columns must match c_vars");
    if (S.cols() != static_cast<int>(w_vars.size()))
        throw std::invalid_argument("S columns must match w_vars");
    for (const auto& n : declared_outputs)
        if (std::find(c_vars.begin(), c_vars.end(), n) == c_vars.end())
            throw std::invalid_argument("declared output is not a control variable: " + n);
}

Behavior ControlProblem::full_plant() const {
    return {PolyMatrix::hstack(R, M), joined_vars(*this)};
}

const char* to_string(SynthStatus s) {
    switch (s) {
        case SynthStatus::ok: return "ok";
        case SynthStatus::not_regularly_implementable: return "not regularly implementable";
        case SynthStatus::partition_unsatisfiable: return "partition constraint unsatisfiable";
    }
    return "?";
}

Behavior hidden_behavior(const ControlProblem& p) {
    return minimal_rep(Behavior{p.R, p.w_vars});
}

Behavior manifest_behavior(const ControlProblem& p) { return eliminate(p.full_plant(), p.c_vars); }

Behavior control_manifest(const ControlProblem& p) { return eliminate(p.full_plant(), p.w_vars); }

Behavior canonical_controller(const ControlProblem& p) {
    const PolyMatrix top = PolyMatrix::hstack(p.R, p.M);
    const PolyMatrix bottom = PolyMatrix::hstack(p.S, PolyMatrix::zero(p.S.rows(), p.M.cols()));
    return eliminate(Behavior{PolyMatrix::vstack(top, bottom), joined_vars(p)}, p.w_vars);
}

Behavior controlled_behavior(const ControlProblem& p, const Behavior& c) {
    if (c.vars != p.c_vars) throw std::invalid_argument("controller must be over c_vars");
    const PolyMatrix top = PolyMatrix::hstack(p.R, p.M);
    const PolyMatrix bottom = PolyMatrix::hstack(PolyMatrix::zero(c.rep.rows(), p.R.cols()), c.rep);
    return eliminate(Behavior{PolyMatrix::vstack(top, bottom), joined_vars(p)}, p.c_vars);
}

bool is_implementable(const ControlProblem& p) {
    const Behavior spec = p.spec_behavior();
    return includes(hidden_behavior(p), spec) && includes(spec, manifest_behavior(p));
}

bool is_regular(const ControlProblem& p, const Behavior& c) {
    if (c.vars != p.c_vars) throw std::invalid_argument("controller must be over c_vars");
    const Behavior cm = minimal_rep(c);
    const PolyMatrix plant = PolyMatrix::hstack(p.R, p.M);
    const PolyMatrix stacked = PolyMatrix::vstack(
        plant, PolyMatrix::hstack(PolyMatrix::zero(cm.rep.rows(), p.R.cols()), cm.rep));
    return rank(stacked) == rank(plant) + cm.rep.rows();
}

bool is_regularly_implementable(const ControlProblem& p) {
    if (!is_implementable(p)) return false;
    const Behavior manifest = manifest_behavior(p);
    return equals(behavior_sum(p.spec_behavior(), controllable_part(manifest)), manifest);
}

std::optional<Behavior> bootstrap_regular_controller(const ControlProblem& p) {
    if (!is_implementable(p)) return std::nullopt;
    const Behavior pc = minimal_rep(control_manifest(p));
    const Behavior ccan = minimal_rep(canonical_controller(p));
    // T represents C_can intersected with P_c; ker T sits inside ker P, so
    // P factors through T, and a unimodular completion of that factor carves
    // the controller rows out of T.
    const Behavior t = minimal_rep(Behavior{PolyMatrix::vstack(pc.rep, ccan.rep), p.c_vars});
    const auto u1 = solve_left_division(t.rep, pc.rep);
    if (!u1) return std::nullopt;
    const auto u2 = unimodular_completion(*u1);
    if (!u2) return std::nullopt;
    Behavior c0{*u2 * t.rep, p.c_vars};
    if (!make_certificate(p, c0).ok()) return std::nullopt;
    return c0;
}

Behavior parametrize(const Behavior& c0, const Behavior& pc, const PolyMatrix& v) {
    if (c0.vars != pc.vars) throw std::invalid_argument("parametrize: variable mismatch");
    if (v.rows() != c0.rep.rows() || v.cols() != pc.rep.rows())
        throw std::invalid_argument("parametrize: V shape mismatch");
    return {c0.rep + v * pc.rep, c0.vars};
}

Certificate make_certificate(const ControlProblem& p, const Behavior& c) {
    Certificate cert;
    cert.implementable = is_implementable(p);
    cert.regularly_implementable = cert.implementable && is_regularly_implementable(p);
    cert.regular = is_regular(p, c);
    const Behavior pc = control_manifest(p);
    const Behavior ccan = canonical_controller(p);
    const auto restrict_to_pc = [&](const Behavior& ctrl) {
        return Behavior{PolyMatrix::vstack(ctrl.rep, pc.rep), p.c_vars};
    };
    cert.equivalent_to_canonical = equals(restrict_to_pc(c), restrict_to_pc(ccan));
    return cert;
}

}  // namespace bct
