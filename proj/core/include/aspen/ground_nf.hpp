#pragma once

#include <vector>

#include "aspen/consistency.hpp"
#include "aspen/program.hpp"

namespace aspen {

struct GroundingResult {
    std::vector<GroundRule> rules;
    bool complete = false;   // the level fixpoint was reached within budget
    std::size_t levels = 0;
};

// Level-saturating grounding that replaces instances whose head the oracle
// certifies forbidden by the constraint `:- body`. With a sound oracle the
// output is a valid grounding; with a complete one it is finite for
// programs with finitely many finite answer sets.
GroundingResult ground_not_forbidden(const Program& p, const ForbiddenOracle& oracle,
                                     const Budget& b);

// Desk-scale validity check: the grounding and the depth-bounded naive
// grounding must have identical answer sets. Sound when depth covers every
// term of the grounding and of any answer set.
bool validate_grounding(const Program& p, const GroundingResult& g, int depth);

}  // namespace aspen
