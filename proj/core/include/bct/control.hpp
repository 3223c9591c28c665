#ifndef BCT_CONTROL_HPP
#define BCT_CONTROL_HPP

#include <optional>
#include <string>
#include <vector>

#include "bct/behavior.hpp"

namespace bct {

/// A behavioral control problem: full plant [R M] over (w, c), specification
/// S over w, and optionally the control variables declared to be plant
/// outputs (inputs of any admissible controller).
struct ControlProblem {
    PolyMatrix R;  // to-be-controlled block, cols = |w_vars|
    PolyMatrix M;  // control block, cols = |c_vars|, rows = R.rows()
    PolyMatrix S;  // specification, cols = |w_vars|
    std::vector<std::string> w_vars;
    std::vector<std::string> c_vars;
    std::vector<std::string> declared_outputs;

    void validate() const;
    Behavior spec_behavior() const { return {S, w_vars}; }
    Behavior full_plant() const;
};

/// Checks a controller must pass; always recomputed, never trusted.
struct Certificate {
    bool implementable = false;
    bool regularly_implementable = false;
    bool regular = false;
    bool equivalent_to_canonical = false;
    bool ok() const {
        return implementable && regularly_implementable && regular && equivalent_to_canonical;
    }
};

struct SynthesisResult {
    Behavior controller;          // over c_vars
    Certificate certificate;
    PolyMatrix V;                 // parametrization matrix actually used
    std::vector<std::string> irrelevant;  // minint: disconnected control variables
    bool input_selectable = false;        // iopart: declared outputs fit the input block
};

enum class SynthStatus {
    ok,
    not_regularly_implementable,
    partition_unsatisfiable,
};
const char* to_string(SynthStatus s);

/// N = {w | (w, 0) in P_full}: the trajectories hidden from the controller.
Behavior hidden_behavior(const ControlProblem& p);

/// P: projection of the full plant onto w.
Behavior manifest_behavior(const ControlProblem& p);

/// P_c: projection of the full plant onto c.
Behavior control_manifest(const ControlProblem& p);

/// Eliminate w from [R M; S 0].
Behavior canonical_controller(const ControlProblem& p);

/// Projection onto w of the plant interconnected with controller C over c.
Behavior controlled_behavior(const ControlProblem& p, const Behavior& c);

/// N inside S inside P.
bool is_implementable(const ControlProblem& p);

/// rank [R M; 0 C] = rank [R M] + rank C, exactly.
bool is_regular(const ControlProblem& p, const Behavior& c);

/// Implementable and S + P^ctr = P.
bool is_regularly_implementable(const ControlProblem& p);

/// Constructs one regular controller equivalent to the canonical controller,
/// or reports that none exists. Self-certifying: the returned controller has
/// passed the regularity and equivalence checks.
std::optional<Behavior> bootstrap_regular_controller(const ControlProblem& p);

/// ker(C0 + V * Pc-rep): the family of all regular equivalents, indexed by V.
Behavior parametrize(const Behavior& c0, const Behavior& pc, const PolyMatrix& v);

/// Full certificate for a given controller against a problem.
Certificate make_certificate(const ControlProblem& p, const Behavior& c);

}  // namespace bct

#endif
