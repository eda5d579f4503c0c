#include "aspen/positions.hpp"

#include <algorithm>

namespace aspen {

const PositionInfo PositionProfile::empty_{};

const PositionInfo& PositionProfile::at(const std::string& predicate,
                                        std::size_t index) const {
    auto it = positions_.find({predicate, index});
    return it == positions_.end() ? empty_ : it->second;
}

PositionInfo& PositionProfile::slot(const std::string& predicate, std::size_t index) {
    return positions_[{predicate, index}];
}

bool PositionProfile::conforms(const Atom& a) const {
    for (std::size_t k = 0; k < a.args().size(); ++k) {
        const PositionInfo& info = at(a.predicate(), k);
        if (info.allows_functional) continue;
        if (!a.args()[k].is_constant_like()) return false;
        if (!info.constant_pool.count(a.args()[k])) return false;
    }
    return true;
}

namespace {

// Abstract value for a variable or position: reachable constants plus a
// flag once functional terms (or unbounded arithmetic) may occur.
struct Abstract {
    std::set<Term> pool;
    bool functional = false;

    bool merge(const Abstract& other) {
        bool changed = false;
        if (other.functional && !functional) {
            functional = true;
            changed = true;
        }
        for (const Term& t : other.pool)
            if (pool.insert(t).second) changed = true;
        return changed;
    }
};

Abstract abstract_of_position(const PositionProfile& profile, const std::string& pred,
                              std::size_t idx) {
    const PositionInfo& info = profile.at(pred, idx);
    Abstract a;
    a.functional = info.allows_functional;
    a.pool = info.constant_pool;
    return a;
}

}  // namespace

PositionProfile analyze_positions(const Program& p) {
    PositionProfile profile;
    // Make every position of every predicate present, including body-only ones.
    for (const auto& [pred, arity] : p.symbols.predicate_arity)
        for (std::size_t k = 0; k < arity; ++k) profile.slot(pred, k);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : p.rules) {
            if (!r.head) continue;
            // Variable abstractions from positive body positions: a variable
            // bound by matching takes the intersection of its occurrences.
            std::map<std::string, Abstract> var_abs;
            auto meet_var = [&](const std::string& v, const Abstract& a) {
                auto it = var_abs.find(v);
                if (it == var_abs.end()) {
                    var_abs.emplace(v, a);
                    return;
                }
                Abstract& cur = it->second;
                cur.functional = cur.functional && a.functional;
                std::set<Term> meet;
                std::set_intersection(cur.pool.begin(), cur.pool.end(), a.pool.begin(),
                                      a.pool.end(), std::inserter(meet, meet.begin()));
                if (cur.functional || a.functional) {
                    // One side unbounded: keep the other side's pool.
                    if (!cur.functional)
                        ;  // cur already the tighter side
                    else if (!a.functional)
                        cur.pool = a.pool;
                } else {
                    cur.pool = std::move(meet);
                }
            };
            for (const Atom& a : r.body_pos)
                for (std::size_t k = 0; k < a.args().size(); ++k) {
                    const Term& t = a.args()[k];
                    if (t.kind() == TermKind::Variable)
                        meet_var(t.name(), abstract_of_position(profile, a.predicate(), k));
                }
            // Variables defined by arithmetic range over unboundedly many
            // integers; treat them like functional flow.
            for (const Builtin& b : r.builtins)
                if (b.op == Builtin::Op::PlusDef && b.target.kind() == TermKind::Variable) {
                    Abstract unbounded;
                    unbounded.functional = true;
                    var_abs[b.target.name()] = unbounded;
                }

            auto flow_term = [&](const Term& t) {
                Abstract a;
                switch (t.kind()) {
                    case TermKind::Constant:
                    case TermKind::Integer:
                        a.pool.insert(t);
                        break;
                    case TermKind::Variable: {
                        auto it = var_abs.find(t.name());
                        if (it != var_abs.end())
                            a = it->second;
                        else
                            a.functional = true;  // unconstrained, stay sound
                        break;
                    }
                    default:
                        a.functional = true;
                        break;
                }
                return a;
            };
            for (std::size_t k = 0; k < r.head->args().size(); ++k) {
                Abstract a = flow_term(r.head->args()[k]);
                PositionInfo& info = profile.slot(r.head->predicate(), k);
                Abstract cur;
                cur.functional = info.allows_functional;
                cur.pool = info.constant_pool;
                if (cur.merge(a)) {
                    info.allows_functional = cur.functional;
                    info.constant_pool = std::move(cur.pool);
                    changed = true;
                }
            }
        }
    }
    return profile;
}

}  // namespace aspen
