#ifndef BCT_IOPART_HPP
#define BCT_IOPART_HPP

#include <optional>

#include "bct/control.hpp"
#include "bct/minint.hpp"

namespace bct {

/// Controller split along the (u, y) column partition: C1 u + C2 y = 0.
/// [C1 C2] is assumed full row rank.
struct PartitionedControllerSpec {
    PolyMatrix C1, C2;
    std::vector<std::string> u_vars, y_vars;
};

/// True iff y can be placed in the input part, i.e. C1 is full row rank.
bool is_input_selectable(const PartitionedControllerSpec& spec);

/// Polynomial V with C + V*P full row rank, when rank [P; C] >= rows(C);
/// nullopt when that rank condition fails (and then no V exists).
std::optional<PolyMatrix> construct_fullrank_V(const PolyMatrix& c, const PolyMatrix& p);

/// Five-step solver for control under an a-priori input-output partition:
/// the declared outputs of the plant must land in the controller's inputs.
struct IopartOutcome {
    SynthStatus status;
    std::optional<SynthesisResult> result;
};
IopartOutcome solve_io_partition(const ControlProblem& p);

}  // namespace bct

#endif
