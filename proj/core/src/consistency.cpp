#include "aspen/consistency.hpp"

#include <set>
#include <unordered_map>

#include "aspen/errors.hpp"
#include "aspen/grounding.hpp"
#include "aspen/solver.hpp"

namespace aspen {

std::string to_string(Outcome::Kind k) {
    switch (k) {
        case Outcome::Kind::Consistent: return "consistent";
        case Outcome::Kind::Inconsistent: return "inconsistent";
        case Outcome::Kind::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

Outcome is_consistent(const Program& p, const Budget& b, ForbiddenOracle pruning) {
    std::unordered_map<Atom, bool, AtomHash> verdicts;
    auto forbidden = [&](const Atom& a) {
        if (!pruning) return false;
        auto it = verdicts.find(a);
        if (it != verdicts.end()) return it->second;
        bool v = pruning(a);
        verdicts.emplace(a, v);
        return v;
    };

    Interpretation level;  // A_{i-1}
    for (std::size_t i = 1; i <= b.max_iterations; ++i) {
        // Step 2: add heads of instances whose positive body lies in the level.
        Interpretation next;
        for (const Atom& a : level.atoms()) next.insert(a);
        for (const Rule& r : p.rules) {
            if (!r.head) continue;
            for (const Substitution& sigma : match_positive_body(r, level)) {
                auto g = instantiate(r, sigma);
                if (!g || !g->head) continue;
                if (next.contains(*g->head)) continue;
                if (forbidden(*g->head)) continue;
                next.insert(*g->head);
                if (next.size() > b.max_atoms) {
                    Outcome out;
                    out.kind = Outcome::Kind::BudgetExhausted;
                    out.witness = next;
                    out.iterations = i;
                    return out;
                }
            }
        }
        // Step 3: reject on a fixpoint, before any solver call.
        if (next.size() == level.size()) {
            Outcome out;
            out.kind = Outcome::Kind::Inconsistent;
            out.witness = next;
            out.iterations = i;
            return out;
        }
        level = next;

        // Step 4: the level program.
        std::set<GroundRule> level_rules;
        bool exhausted = false;
        for (const Rule& r : p.rules) {
            for (const Substitution& sigma : match_positive_body(r, level)) {
                auto g = instantiate(r, sigma);
                if (!g) continue;
                level_rules.insert(std::move(*g));
                if (level_rules.size() > b.max_ground_rules) {
                    exhausted = true;
                    break;
                }
            }
            if (exhausted) break;
        }
        if (exhausted) {
            Outcome out;
            out.kind = Outcome::Kind::BudgetExhausted;
            out.witness = level;
            out.iterations = i;
            return out;
        }

        // Step 5: accept on an answer set of the level program that leaves no
        // ground instance of p unsatisfied. Candidates with a nonempty active
        // set are skipped, not failures.
        std::vector<GroundRule> rules(level_rules.begin(), level_rules.end());
        SolveLimits sl;
        sl.max_nodes = b.solver_nodes;
        try {
            Interpretation accepted;
            bool found = false;
            visit_answer_sets(
                rules,
                [&](const Interpretation& candidate) {
                    if (!active(p, candidate).empty()) return false;
                    accepted = candidate;
                    found = true;
                    return true;
                },
                sl);
            if (found) {
                Outcome out;
                out.kind = Outcome::Kind::Consistent;
                out.witness = accepted;
                out.iterations = i;
                return out;
            }
        } catch (const ResourceExceeded&) {
            Outcome out;
            out.kind = Outcome::Kind::BudgetExhausted;
            out.witness = level;
            out.iterations = i;
            return out;
        }
    }
    Outcome out;
    out.kind = Outcome::Kind::BudgetExhausted;
    out.witness = level;
    out.iterations = b.max_iterations;
    return out;
}

}  // namespace aspen
