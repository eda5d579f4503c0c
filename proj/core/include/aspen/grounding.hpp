#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "aspen/interpretation.hpp"
#include "aspen/program.hpp"
#include "aspen/substitution.hpp"

namespace aspen {

struct GroundingLimits {
    std::size_t max_terms = 100000;
    std::size_t max_ground_rules = 1000000;
};

// All ground terms over the program's constants and function symbols with
// nesting depth <= depth; depth 0 is exactly the constants.
std::set<Term> herbrand_terms(const Program& p, int depth,
                              const GroundingLimits& limits = {});

// Evaluates a fully instantiated builtin. Unsatisfied or ill-typed
// comparisons fail; PlusDef checks target = base + offset.
bool eval_ground_builtin(const Builtin& b);

// Instantiates r under a substitution that grounds it, evaluating and
// dropping builtins. Returns nullopt when some builtin is unsatisfied.
std::optional<GroundRule> instantiate(const Rule& r, const Substitution& sigma);

// Exactly the substitutions over r's variables with body_pos applied inside
// i and all builtins satisfied; safety makes each returned substitution
// ground the whole rule. Sorted for determinism.
std::vector<Substitution> match_positive_body(const Rule& r, const Interpretation& i);

// Same, but every match extends the seed bindings.
std::vector<Substitution> match_positive_body_seeded(const Rule& r, const Interpretation& i,
                                                     const Substitution& seed);

// Ground(p, T): every instantiation of every rule with substitutions into
// terms, builtins evaluated away. Sorted, deduplicated.
std::vector<GroundRule> ground_with_terms(const Program& p, const std::set<Term>& terms,
                                          const GroundingLimits& limits = {});

// The ground instances of p unsatisfied by i: B+ inside i and
// (head u B-) disjoint from i. Computed by matching, never by
// materializing the full grounding.
std::vector<GroundRule> active(const Program& p, const Interpretation& i);

}  // namespace aspen
