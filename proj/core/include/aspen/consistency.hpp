#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "aspen/interpretation.hpp"
#include "aspen/program.hpp"

namespace aspen {

struct Budget {
    std::size_t max_iterations = 100;
    std::size_t max_atoms = 100000;
    std::size_t max_ground_rules = 1000000;
    std::size_t solver_nodes = 1000000;
    std::size_t forbidden_depth = 32;
    std::size_t forbidden_calls = 10000;
    std::size_t closure_atoms = 20000;
};

struct Outcome {
    enum class Kind { Consistent, Inconsistent, BudgetExhausted };
    Kind kind = Kind::BudgetExhausted;
    // Consistent: the accepting answer set. BudgetExhausted: the last level.
    Interpretation witness;
    std::size_t iterations = 0;

    bool consistent() const { return kind == Kind::Consistent; }
};

std::string to_string(Outcome::Kind k);

// True means certified forbidden; false carries no information.
using ForbiddenOracle = std::function<bool(const Atom&)>;

// The incremental semi-decision procedure: level expansion via positive-body
// matching, reject on a level fixpoint, accept when some answer set of the
// level program has an empty active set. With an oracle, level expansion
// skips atoms certified forbidden. Verdicts are correct regardless of
// budget; running out of any resource yields BudgetExhausted.
Outcome is_consistent(const Program& p, const Budget& b, ForbiddenOracle pruning = nullptr);

}  // namespace aspen
