#include "aspen/grounding.hpp"

#include <algorithm>
#include <map>

#include "aspen/errors.hpp"

namespace aspen {

namespace {

// Pattern match of a (possibly variable-carrying) term against a ground term.
bool match_term(const Term& pattern, const Term& ground, Substitution& sigma) {
    switch (pattern.kind()) {
        case TermKind::Variable:
            return sigma.bind(pattern.name(), ground);
        case TermKind::Function:
            if (ground.kind() != TermKind::Function || pattern.name() != ground.name() ||
                pattern.args().size() != ground.args().size())
                return false;
            for (std::size_t k = 0; k < pattern.args().size(); ++k)
                if (!match_term(pattern.args()[k], ground.args()[k], sigma)) return false;
            return true;
        default:
            return pattern == ground;
    }
}

bool match_atom(const Atom& pattern, const Atom& ground, Substitution& sigma) {
    if (pattern.predicate() != ground.predicate() ||
        pattern.args().size() != ground.args().size())
        return false;
    for (std::size_t k = 0; k < pattern.args().size(); ++k)
        if (!match_term(pattern.args()[k], ground.args()[k], sigma)) return false;
    return true;
}

enum class BuiltinState { Satisfied, Violated, Pending };

BuiltinState eval_builtin(const Builtin& b, Substitution& sigma) {
    Term lhs = apply(sigma, b.lhs);
    Term rhs = apply(sigma, b.rhs);
    switch (b.op) {
        case Builtin::Op::Less:
            if (!lhs.is_ground() || !rhs.is_ground()) return BuiltinState::Pending;
            if (lhs.kind() != TermKind::Integer || rhs.kind() != TermKind::Integer)
                return BuiltinState::Violated;
            return lhs.value() < rhs.value() ? BuiltinState::Satisfied : BuiltinState::Violated;
        case Builtin::Op::NotEqual:
            if (!lhs.is_ground() || !rhs.is_ground()) return BuiltinState::Pending;
            return lhs == rhs ? BuiltinState::Violated : BuiltinState::Satisfied;
        case Builtin::Op::Equal:
            if (!lhs.is_ground() || !rhs.is_ground()) return BuiltinState::Pending;
            return lhs == rhs ? BuiltinState::Satisfied : BuiltinState::Violated;
        case Builtin::Op::PlusDef: {
            Term base = apply(sigma, b.base);
            Term target = apply(sigma, b.target);
            if (!base.is_ground()) {
                // Invert when the target is known: base := target - offset.
                if (target.is_ground() && base.kind() == TermKind::Variable) {
                    if (target.kind() != TermKind::Integer) return BuiltinState::Violated;
                    return sigma.bind(base.name(), Term::integer(target.value() - b.offset))
                               ? BuiltinState::Satisfied
                               : BuiltinState::Violated;
                }
                return BuiltinState::Pending;
            }
            if (base.kind() != TermKind::Integer) return BuiltinState::Violated;
            Term result = Term::integer(base.value() + b.offset);
            if (target.kind() == TermKind::Variable)
                return sigma.bind(target.name(), result) ? BuiltinState::Satisfied
                                                         : BuiltinState::Violated;
            return target == result ? BuiltinState::Satisfied : BuiltinState::Violated;
        }
    }
    return BuiltinState::Violated;
}

// Binds PlusDef targets and checks ground comparisons; false on violation.
bool propagate_builtins(const Rule& r, Substitution& sigma, bool require_complete) {
    bool progress = true;
    std::vector<bool> done(r.builtins.size(), false);
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < r.builtins.size(); ++k) {
            if (done[k]) continue;
            switch (eval_builtin(r.builtins[k], sigma)) {
                case BuiltinState::Satisfied:
                    done[k] = true;
                    progress = true;
                    break;
                case BuiltinState::Violated:
                    return false;
                case BuiltinState::Pending:
                    break;
            }
        }
    }
    if (require_complete)
        return std::all_of(done.begin(), done.end(), [](bool d) { return d; });
    return true;
}

}  // namespace

std::set<Term> herbrand_terms(const Program& p, int depth, const GroundingLimits& limits) {
    std::set<Term> terms(p.constants.begin(), p.constants.end());
    std::vector<Term> frontier(terms.begin(), terms.end());
    for (int d = 1; d <= depth; ++d) {
        std::vector<Term> pool(terms.begin(), terms.end());
        std::vector<Term> added;
        for (const auto& [symbol, arity] : p.symbols.function_arity) {
            std::vector<std::size_t> idx(arity, 0);
            if (arity == 0) continue;
            while (true) {
                std::vector<Term> args;
                args.reserve(arity);
                for (std::size_t k = 0; k < arity; ++k) args.push_back(pool[idx[k]]);
                Term t = Term::function(symbol, std::move(args));
                if (terms.insert(t).second) {
                    added.push_back(std::move(t));
                    if (terms.size() > limits.max_terms)
                        throw ResourceExceeded("herbrand term cap exceeded");
                }
                std::size_t k = 0;
                for (; k < arity; ++k) {
                    if (++idx[k] < pool.size()) break;
                    idx[k] = 0;
                }
                if (k == arity) break;
            }
        }
        if (added.empty()) break;
    }
    return terms;
}

bool eval_ground_builtin(const Builtin& b) {
    Substitution sigma;
    return eval_builtin(b, sigma) == BuiltinState::Satisfied;
}

std::optional<GroundRule> instantiate(const Rule& r, const Substitution& sigma) {
    Substitution extended = sigma;
    if (!propagate_builtins(r, extended, true)) return std::nullopt;
    GroundRule g;
    if (r.head) g.head = apply(extended, *r.head);
    for (const Atom& a : r.body_pos) g.body_pos.push_back(apply(extended, a));
    for (const Atom& a : r.body_neg) g.body_neg.push_back(apply(extended, a));
    return g;
}

std::vector<Substitution> match_positive_body_seeded(const Rule& r, const Interpretation& i,
                                                     const Substitution& seed) {
    std::map<std::string, std::vector<const Atom*>> by_predicate;
    for (const Atom& a : i.atoms()) by_predicate[a.predicate()].push_back(&a);

    std::vector<Substitution> out;
    auto descend = [&](std::size_t k, Substitution sigma, auto&& self) -> void {
        if (!propagate_builtins(r, sigma, false)) return;
        if (k == r.body_pos.size()) {
            if (!propagate_builtins(r, sigma, true)) return;
            out.push_back(std::move(sigma));
            return;
        }
        auto it = by_predicate.find(r.body_pos[k].predicate());
        if (it == by_predicate.end()) return;
        for (const Atom* candidate : it->second) {
            Substitution extended = sigma;
            if (match_atom(r.body_pos[k], *candidate, extended))
                self(k + 1, std::move(extended), self);
        }
    };
    descend(0, seed, descend);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Substitution> match_positive_body(const Rule& r, const Interpretation& i) {
    return match_positive_body_seeded(r, i, Substitution{});
}

std::vector<GroundRule> ground_with_terms(const Program& p, const std::set<Term>& terms,
                                          const GroundingLimits& limits) {
    std::vector<Term> pool(terms.begin(), terms.end());
    std::set<GroundRule> out;
    for (const Rule& r : p.rules) {
        // PlusDef targets are computed, not enumerated.
        std::vector<std::string> free_vars;
        for (const std::string& v : r.variables()) {
            bool is_target = std::any_of(
                r.builtins.begin(), r.builtins.end(), [&](const Builtin& b) {
                    return b.op == Builtin::Op::PlusDef &&
                           b.target.kind() == TermKind::Variable && b.target.name() == v;
                });
            if (!is_target) free_vars.push_back(v);
        }
        if (!free_vars.empty() && pool.empty()) continue;
        std::vector<std::size_t> idx(free_vars.size(), 0);
        while (true) {
            Substitution sigma;
            for (std::size_t k = 0; k < free_vars.size(); ++k)
                sigma.bind(free_vars[k], pool[idx[k]]);
            if (auto g = instantiate(r, sigma)) {
                out.insert(std::move(*g));
                if (out.size() > limits.max_ground_rules)
                    throw ResourceExceeded("ground rule cap exceeded");
            }
            std::size_t k = 0;
            for (; k < free_vars.size(); ++k) {
                if (++idx[k] < pool.size()) break;
                idx[k] = 0;
            }
            if (k == free_vars.size()) break;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<GroundRule> active(const Program& p, const Interpretation& i) {
    std::set<GroundRule> out;
    for (const Rule& r : p.rules) {
        for (const Substitution& sigma : match_positive_body(r, i)) {
            auto g = instantiate(r, sigma);
            if (!g) continue;
            bool satisfied = false;
            if (g->head && i.contains(*g->head)) satisfied = true;
            for (const Atom& a : g->body_neg)
                if (i.contains(a)) satisfied = true;
            if (!satisfied) out.insert(std::move(*g));
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace aspen
