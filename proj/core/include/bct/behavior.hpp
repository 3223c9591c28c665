#ifndef BCT_BEHAVIOR_HPP
#define BCT_BEHAVIOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "bct/polymat.hpp"

namespace bct {

/// A behavior as a kernel representation: the trajectories w with
/// rep(d/dt) w = 0. Variables are named; all set-valued results report
/// names so column permutations cannot corrupt reporting.
struct Behavior {
    PolyMatrix rep;                  // rows = equations, cols = variables
    std::vector<std::string> vars;   // length = rep.cols()

    Behavior() = default;
    Behavior(PolyMatrix r, std::vector<std::string> v);

    /// The behavior with no laws at all (0 equations).
    static Behavior full(std::vector<std::string> vars);
};

/// Number of outputs p(B) = rank of any kernel representation.
int num_outputs(const Behavior& b);

/// Equivalent full-row-rank representation (nonzero rows of the Hermite form).
Behavior minimal_rep(const Behavior& b);

/// Projection onto the variables not in `drop` (elimination of latent
/// variables): transform so the dropped block is [M1; 0] with M1 full row
/// rank, keep the kept-variable block of the zero rows.
Behavior eliminate(const Behavior& b, const std::vector<std::string>& drop);

/// b1 is a subbehavior of b2 (every trajectory of b1 satisfies b2's laws).
bool includes(const Behavior& b1, const Behavior& b2);

/// Same behavior, both inclusions.
bool equals(const Behavior& b1, const Behavior& b2);

/// {w1 + w2 | wi in Bi}, built by eliminating the auxiliary trajectory from
/// R1 (w - a) = 0, R2 a = 0.
Behavior behavior_sum(const Behavior& b1, const Behavior& b2);

/// Largest controllable subbehavior: strip the nonunit Smith diagonal of a
/// minimal representation.
Behavior controllable_part(const Behavior& b);

/// Variables whose column in a minimal representation is identically zero.
std::vector<std::string> irrelevant_columns(const Behavior& b);

/// Input-output partition with the desired inputs inside the input block.
struct IoPartition {
    std::vector<std::string> outputs;
    std::vector<std::string> inputs;
};
std::optional<IoPartition> io_partition(const Behavior& b,
                                        const std::vector<std::string>& desired_inputs);

}  // namespace bct

#endif
