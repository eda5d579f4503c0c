#include "aspen/ground_nf.hpp"

#include <set>

#include "aspen/grounding.hpp"
#include "aspen/interpretation.hpp"
#include "aspen/solver.hpp"
#include "aspen/substitution.hpp"

namespace aspen {

GroundingResult ground_not_forbidden(const Program& p, const ForbiddenOracle& oracle,
                                     const Budget& b) {
    GroundingResult result;
    std::set<GroundRule> collected;
    Interpretation level;

    for (std::size_t i = 1; i <= b.max_iterations; ++i) {
        result.levels = i;
        Interpretation next;
        for (const Atom& a : level.atoms()) next.insert(a);
        for (const Rule& r : p.rules) {
            for (const Substitution& sigma : match_positive_body(r, level)) {
                auto g = instantiate(r, sigma);
                if (!g) continue;
                if (!g->head) {
                    // A constraint head is vacuously all-forbidden: it is its
                    // own `:- body` and never feeds the level.
                    collected.insert(std::move(*g));
                    continue;
                }
                if (oracle(*g->head)) {
                    GroundRule blocked;
                    blocked.body_pos = g->body_pos;
                    blocked.body_neg = g->body_neg;
                    collected.insert(std::move(blocked));
                } else {
                    next.insert(*g->head);
                    collected.insert(std::move(*g));
                }
                if (collected.size() > b.max_ground_rules || next.size() > b.max_atoms) {
                    result.rules.assign(collected.begin(), collected.end());
                    result.complete = false;
                    return result;
                }
            }
        }
        if (next.size() == level.size()) {
            result.rules.assign(collected.begin(), collected.end());
            result.complete = true;
            return result;
        }
        level = next;
    }
    result.rules.assign(collected.begin(), collected.end());
    result.complete = false;
    return result;
}

bool validate_grounding(const Program& p, const GroundingResult& g, int depth) {
    std::vector<GroundRule> reference = ground_with_terms(p, herbrand_terms(p, depth));
    std::vector<Interpretation> expected = enumerate_answer_sets(reference);
    std::vector<Interpretation> actual = enumerate_answer_sets(g.rules);
    if (expected.size() != actual.size()) return false;
    for (std::size_t k = 0; k < expected.size(); ++k)
        if (!(expected[k] == actual[k])) return false;
    return true;
}

}  // namespace aspen
