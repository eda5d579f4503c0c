#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "aspen/interpretation.hpp"
#include "aspen/program.hpp"

namespace aspen {

// Stage numbers from the proving fixpoint; a valid ordering witness for the
// proven-ness of every atom of an answer set.
using Ordering = std::map<Atom, std::size_t>;

bool is_model(const std::vector<GroundRule>& g, const Interpretation& i);

struct AnswerSetCheck {
    bool accepted = false;
    Ordering witness;  // meaningful only when accepted
};

// I is an answer set iff it is a model and equals the least fixpoint of the
// consequence operator restricted to rules with negative body disjoint from
// I and head inside I.
AnswerSetCheck check_answer_set(const std::vector<GroundRule>& g, const Interpretation& i);
bool is_answer_set(const std::vector<GroundRule>& g, const Interpretation& i);

struct SolveLimits {
    std::size_t max_nodes = 1000000;
};

// All answer sets (up to limit), found by backtracking over candidate heads
// with propagation; every candidate is validated by check_answer_set.
// Throws ResourceExceeded past the node budget.
std::vector<Interpretation> enumerate_answer_sets(const std::vector<GroundRule>& g,
                                                  std::optional<std::size_t> limit = {},
                                                  const SolveLimits& limits = {});

// Streaming variant; the visitor returns true to stop the search.
void visit_answer_sets(const std::vector<GroundRule>& g,
                       const std::function<bool(const Interpretation&)>& visit,
                       const SolveLimits& limits = {});

}  // namespace aspen
