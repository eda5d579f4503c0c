#include "aspen/forbidden.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "aspen/grounding.hpp"
#include "aspen/printer.hpp"

namespace aspen {

namespace {

std::set<Term> carried_terms(const Interpretation& pos, const Interpretation& neg) {
    std::set<Term> out;
    auto collect = [&](const Interpretation& i) {
        for (const Atom& a : i.atoms())
            for (const Term& t : a.args()) {
                std::vector<Term> subs;
                t.collect_subterms(subs);
                out.insert(subs.begin(), subs.end());
            }
    };
    collect(pos);
    collect(neg);
    return out;
}

// Mapping of fresh constants to non-fresh terms (Algorithm 1's g and the
// correctness proof's h).
struct FreshMap {
    std::map<std::uint64_t, Term> images;

    bool identity() const { return images.empty(); }

    Term rewrite(const Term& t) const {
        switch (t.kind()) {
            case TermKind::FreshConstant: {
                auto it = images.find(t.fresh_id());
                return it == images.end() ? t : it->second;
            }
            case TermKind::Function: {
                std::vector<Term> args;
                args.reserve(t.args().size());
                for (const Term& a : t.args()) args.push_back(rewrite(a));
                return Term::function(t.name(), std::move(args));
            }
            default:
                return t;
        }
    }

    Atom rewrite(const Atom& a) const {
        std::vector<Term> args;
        args.reserve(a.args().size());
        for (const Term& t : a.args()) args.push_back(rewrite(t));
        return Atom(a.predicate(), std::move(args));
    }

    Interpretation rewrite(const Interpretation& i) const {
        Interpretation out;
        for (const Atom& a : i.atoms()) out.insert(rewrite(a));
        return out;
    }

    std::string str() const {
        if (identity()) return "identity";
        std::ostringstream os;
        os << "[";
        bool first = true;
        for (const auto& [id, image] : images) {
            if (!first) os << ", ";
            first = false;
            os << "$c" << id << "/" << to_string(image);
        }
        os << "]";
        return os.str();
    }
};

void collect_fresh_ids(const Term& t, std::set<std::uint64_t>& out) {
    if (t.kind() == TermKind::FreshConstant) out.insert(t.fresh_id());
    for (const Term& a : t.args()) collect_fresh_ids(a, out);
}

bool head_is_variable_free(const Rule& r) {
    return !r.head || r.head->is_ground();
}

}  // namespace

TermUniverse::TermUniverse(const Program& p, const Interpretation& pos,
                           const Interpretation& neg) {
    for (const auto& [pred, arity] : p.symbols.predicate_arity) predicates_.insert(pred);
    terms_ = p.ground_subterms();
    std::set<Term> carried = carried_terms(pos, neg);
    terms_.insert(carried.begin(), carried.end());
    for (const Term& t : terms_)
        if (!t.has_fresh()) enumerable_.insert(t);
}

bool TermUniverse::contains_term(const Term& t) const {
    return t.is_constant_like() || terms_.count(t) != 0;
}

bool TermUniverse::contains(const Atom& a) const {
    if (!predicates_.count(a.predicate())) return false;
    return std::all_of(a.args().begin(), a.args().end(),
                       [&](const Term& t) { return contains_term(t); });
}

Interpretation r_plus(const Rule& r, const Interpretation& lp, const Interpretation& ln) {
    Interpretation out;
    for (const Substitution& sigma : match_positive_body(r, lp)) {
        bool neg_inside = std::all_of(r.body_neg.begin(), r.body_neg.end(),
                                      [&](const Atom& a) { return ln.contains(apply(sigma, a)); });
        if (neg_inside && r.head) out.insert(apply(sigma, *r.head));
        if (r.body_neg.size() == 1) {
            bool head_inside = !r.head || ln.contains(apply(sigma, *r.head));
            if (head_inside) out.insert(apply(sigma, r.body_neg[0]));
        }
    }
    return out;
}

Interpretation r_minus(const Rule& r, const Interpretation& lp, const Interpretation& ln,
                       const TermUniverse& universe) {
    (void)lp;
    Interpretation out;
    if (r.body_pos.size() != 1) return out;

    // Match the head and every negative body atom into ln, then complete
    // variables left unbound over the universe pool.
    std::vector<const Atom*> patterns;
    if (r.head) patterns.push_back(&*r.head);
    for (const Atom& a : r.body_neg) patterns.push_back(&a);

    std::vector<Term> pool(universe.enumerable().begin(), universe.enumerable().end());

    auto emit = [&](const Substitution& sigma) {
        Substitution complete = sigma;
        // Remaining variables of the positive atom range over the pool.
        std::vector<std::string> free;
        for (const std::string& v : r.variables())
            if (!complete.lookup(v)) free.push_back(v);
        std::vector<std::size_t> idx(free.size(), 0);
        if (!free.empty() && pool.empty()) return;
        while (true) {
            Substitution full = complete;
            bool ok = true;
            for (std::size_t k = 0; k < free.size(); ++k)
                ok = ok && full.bind(free[k], pool[idx[k]]);
            if (ok) {
                if (auto g = instantiate(r, full)) {
                    const Atom& b = g->body_pos[0];
                    if (b.is_ground() && universe.contains(b)) out.insert(b);
                }
            }
            std::size_t k = 0;
            for (; k < free.size(); ++k) {
                if (++idx[k] < pool.size()) break;
                idx[k] = 0;
            }
            if (k == free.size()) break;
        }
    };

    auto descend = [&](std::size_t k, Substitution sigma, auto&& self) -> void {
        if (k == patterns.size()) {
            emit(sigma);
            return;
        }
        for (const Atom& target : ln.atoms()) {
            Substitution extended = sigma;
            if (target.predicate() == patterns[k]->predicate() &&
                target.args().size() == patterns[k]->args().size()) {
                bool ok = true;
                for (std::size_t j = 0; ok && j < target.args().size(); ++j) {
                    Term instance = apply(extended, patterns[k]->args()[j]);
                    Substitution trial = extended;
                    // Pattern-match the (possibly bound) argument.
                    struct M {
                        static bool run(const Term& pat, const Term& ground, Substitution& s) {
                            switch (pat.kind()) {
                                case TermKind::Variable: return s.bind(pat.name(), ground);
                                case TermKind::Function:
                                    if (ground.kind() != TermKind::Function ||
                                        pat.name() != ground.name() ||
                                        pat.args().size() != ground.args().size())
                                        return false;
                                    for (std::size_t q = 0; q < pat.args().size(); ++q)
                                        if (!run(pat.args()[q], ground.args()[q], s)) return false;
                                    return true;
                                default: return pat == ground;
                            }
                        }
                    };
                    if (M::run(instance, target.args()[j], trial))
                        extended = trial;
                    else
                        ok = false;
                }
                if (ok) self(k + 1, extended, self);
            }
        }
    };
    descend(0, Substitution{}, descend);
    return out;
}

SignedPair signed_closure(const Program& p, const SignedPair& s, std::size_t max_atoms) {
    TermUniverse universe(p, s.pos, s.neg);
    SignedPair cur;
    for (const Atom& a : s.pos.atoms()) cur.pos.insert(a);
    for (const Atom& a : s.neg.atoms()) cur.neg.insert(a);

    bool grew = true;
    while (grew) {
        grew = false;
        for (const Rule& r : p.rules) {
            if (cur.pos.size() + cur.neg.size() > max_atoms) return cur;
            // Forward step.
            if (r.head) {
                for (const Substitution& sigma : match_positive_body(r, cur.pos)) {
                    bool neg_inside =
                        std::all_of(r.body_neg.begin(), r.body_neg.end(), [&](const Atom& a) {
                            return cur.neg.contains(apply(sigma, a));
                        });
                    if (!neg_inside) continue;
                    Atom h = apply(sigma, *r.head);
                    if (universe.contains(h) && cur.pos.insert(h)) grew = true;
                }
            }
            // Negative-body flip, only when the head instance needs no match
            // bindings (variable-free head or constraint).
            if (r.body_neg.size() == 1 && head_is_variable_free(r)) {
                for (const Substitution& sigma : match_positive_body(r, cur.pos)) {
                    bool head_inside = !r.head || cur.neg.contains(apply(sigma, *r.head));
                    if (!head_inside) continue;
                    Atom flip = apply(sigma, r.body_neg[0]);
                    if (universe.contains(flip) && cur.pos.insert(flip)) grew = true;
                }
            }
            // Backward step from constraints.
            if (r.is_constraint() && r.body_pos.size() == 1) {
                Interpretation blocked = r_minus(r, cur.pos, cur.neg, universe);
                for (const Atom& b : blocked.atoms())
                    if (cur.neg.insert(b)) grew = true;
            }
        }
    }
    return cur;
}

bool has_support(const Atom& a, const Program& p, const SignedPair& s) {
    for (const Rule& r : p.rules) {
        if (!r.head) continue;
        Substitution seed;
        bool head_match = true;
        if (r.head->predicate() != a.predicate() || r.head->args().size() != a.args().size())
            continue;
        for (std::size_t k = 0; head_match && k < a.args().size(); ++k) {
            struct M {
                static bool run(const Term& pat, const Term& ground, Substitution& sgm) {
                    switch (pat.kind()) {
                        case TermKind::Variable: return sgm.bind(pat.name(), ground);
                        case TermKind::Function:
                            if (ground.kind() != TermKind::Function || pat.name() != ground.name() ||
                                pat.args().size() != ground.args().size())
                                return false;
                            for (std::size_t q = 0; q < pat.args().size(); ++q)
                                if (!run(pat.args()[q], ground.args()[q], sgm)) return false;
                            return true;
                        default: return pat == ground;
                    }
                }
            };
            head_match = M::run(r.head->args()[k], a.args()[k], seed);
        }
        if (!head_match) continue;
        for (const Substitution& sigma : match_positive_body_seeded(r, s.pos, seed)) {
            bool neg_inside = std::all_of(r.body_neg.begin(), r.body_neg.end(), [&](const Atom& n) {
                return s.neg.contains(apply(sigma, n));
            });
            if (neg_inside) return true;
        }
    }
    return false;
}

namespace {

// Extension-time builtin filter: drop only on violations provable without
// fresh constants; a fresh argument leaves the comparison undecided.
bool extension_viable(const Rule& r, const Substitution& sigma) {
    for (const Builtin& b : r.builtins) {
        Term lhs = apply(sigma, b.op == Builtin::Op::PlusDef ? b.target : b.lhs);
        Term rhs = apply(sigma, b.op == Builtin::Op::PlusDef ? b.base : b.rhs);
        if (lhs.has_fresh() || rhs.has_fresh()) continue;
        if (!lhs.is_ground() || !rhs.is_ground()) continue;
        switch (b.op) {
            case Builtin::Op::Less:
                if (lhs.kind() != TermKind::Integer || rhs.kind() != TermKind::Integer)
                    return false;
                if (!(lhs.value() < rhs.value())) return false;
                break;
            case Builtin::Op::NotEqual:
                if (lhs == rhs) return false;
                break;
            case Builtin::Op::Equal:
                if (!(lhs == rhs)) return false;
                break;
            case Builtin::Op::PlusDef:
                if (rhs.kind() != TermKind::Integer || lhs.kind() != TermKind::Integer)
                    return false;
                if (lhs.value() != rhs.value() + b.offset) return false;
                break;
        }
    }
    return true;
}

}  // namespace

std::vector<Substitution> r_extensions(const Rule& r, const Substitution& sigma,
                                       const PositionProfile& profile, FreshCounter& fresh) {
    Substitution base = sigma;
    // Arithmetic chains rooted in head bindings determine body variables.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const Builtin& b : r.builtins) {
            if (b.op != Builtin::Op::PlusDef) continue;
            Term target = apply(base, b.target);
            Term bottom = apply(base, b.base);
            if (target.kind() == TermKind::Integer && bottom.kind() == TermKind::Variable) {
                if (base.bind(bottom.name(), Term::integer(target.value() - b.offset)))
                    progress = true;
            } else if (bottom.kind() == TermKind::Integer &&
                       target.kind() == TermKind::Variable) {
                if (base.bind(target.name(), Term::integer(bottom.value() + b.offset)))
                    progress = true;
            }
        }
    }

    std::vector<std::string> head_vars;
    if (r.head) {
        Rule head_only;
        head_only.head = r.head;
        head_vars = head_only.variables();
    }

    // Body-only positive variables in first-occurrence order.
    std::vector<std::string> body_only;
    for (const Atom& a : r.body_pos)
        for (const Term& t : a.args()) {
            std::vector<Term> subs;
            t.collect_subterms(subs);
            for (const Term& sub : subs)
                if (sub.kind() == TermKind::Variable &&
                    std::find(head_vars.begin(), head_vars.end(), sub.name()) == head_vars.end() &&
                    std::find(body_only.begin(), body_only.end(), sub.name()) == body_only.end() &&
                    !base.lookup(sub.name()))
                    body_only.push_back(sub.name());
        }

    // Candidate values per variable: the intersected constant pool when every
    // direct position is constant-only, otherwise one fresh constant.
    struct Choice {
        std::string var;
        std::vector<Term> values;
        bool fresh = false;
    };
    std::vector<Choice> choices;
    for (const std::string& v : body_only) {
        bool nested_or_functional = false;
        bool first_pool = true;
        std::set<Term> pool;
        for (const Atom& a : r.body_pos)
            for (std::size_t k = 0; k < a.args().size(); ++k) {
                const Term& t = a.args()[k];
                if (t.kind() == TermKind::Variable && t.name() == v) {
                    const PositionInfo& info = profile.at(a.predicate(), k);
                    if (info.allows_functional) {
                        nested_or_functional = true;
                    } else if (first_pool) {
                        pool = info.constant_pool;
                        first_pool = false;
                    } else {
                        std::set<Term> meet;
                        std::set_intersection(pool.begin(), pool.end(),
                                              info.constant_pool.begin(),
                                              info.constant_pool.end(),
                                              std::inserter(meet, meet.begin()));
                        pool = std::move(meet);
                    }
                } else if (t.kind() != TermKind::Variable) {
                    std::vector<Term> subs;
                    t.collect_subterms(subs);
                    for (const Term& sub : subs)
                        if (sub.kind() == TermKind::Variable && sub.name() == v)
                            nested_or_functional = true;
                }
            }
        Choice c;
        c.var = v;
        if (nested_or_functional || first_pool) {
            c.fresh = true;
        } else {
            c.values.assign(pool.begin(), pool.end());
        }
        choices.push_back(std::move(c));
    }

    std::vector<Substitution> out;
    auto descend = [&](std::size_t k, Substitution cur, auto&& self) -> void {
        if (k == choices.size()) {
            if (extension_viable(r, cur)) out.push_back(std::move(cur));
            return;
        }
        const Choice& c = choices[k];
        if (c.fresh) {
            Substitution next = cur;
            next.bind(c.var, fresh.next());
            self(k + 1, std::move(next), self);
            return;
        }
        for (const Term& value : c.values) {
            Substitution next = cur;
            if (next.bind(c.var, value)) self(k + 1, std::move(next), self);
        }
    };
    descend(0, base, descend);
    return out;
}

namespace {

struct Candidate {
    std::size_t rule_index;
    Substitution sigma;
    FreshMap g;
};

struct Session {
    const Program& program;
    PositionProfile profile;
    Budget budget;
    TraceSink trace;
    FreshCounter fresh;
    std::size_t calls = 0;

    void emit(std::size_t depth, int line, const std::string& event) {
        if (trace)
            trace("DEPTH " + std::to_string(depth) + " | LINE " + std::to_string(line) +
                  " | " + event);
    }

    std::vector<Candidate> candidates(const Atom& a, const TermUniverse& universe) {
        std::vector<Candidate> out;
        std::set<std::uint64_t> fresh_ids;
        for (const Term& t : a.args()) collect_fresh_ids(t, fresh_ids);
        std::vector<std::uint64_t> ids(fresh_ids.begin(), fresh_ids.end());
        std::vector<Term> pool(universe.enumerable().begin(), universe.enumerable().end());

        std::vector<FreshMap> maps;
        if (ids.empty()) {
            maps.push_back(FreshMap{});
        } else {
            std::vector<std::size_t> idx(ids.size(), 0);
            if (pool.empty()) return out;
            while (true) {
                FreshMap g;
                for (std::size_t k = 0; k < ids.size(); ++k) g.images[ids[k]] = pool[idx[k]];
                maps.push_back(std::move(g));
                std::size_t k = 0;
                for (; k < ids.size(); ++k) {
                    if (++idx[k] < pool.size()) break;
                    idx[k] = 0;
                }
                if (k == ids.size()) break;
            }
        }

        for (std::size_t ri = 0; ri < program.rules.size(); ++ri) {
            const Rule& r = program.rules[ri];
            if (!r.head) continue;
            for (const FreshMap& g : maps) {
                Atom target = g.rewrite(a);
                if (r.head->predicate() != target.predicate() ||
                    r.head->args().size() != target.args().size())
                    continue;
                Substitution sigma;
                bool ok = true;
                for (std::size_t k = 0; ok && k < target.args().size(); ++k) {
                    struct M {
                        static bool run(const Term& pat, const Term& ground, Substitution& s) {
                            switch (pat.kind()) {
                                case TermKind::Variable: return s.bind(pat.name(), ground);
                                case TermKind::Function:
                                    if (ground.kind() != TermKind::Function ||
                                        pat.name() != ground.name() ||
                                        pat.args().size() != ground.args().size())
                                        return false;
                                    for (std::size_t q = 0; q < pat.args().size(); ++q)
                                        if (!run(pat.args()[q], ground.args()[q], s)) return false;
                                    return true;
                                default: return pat == ground;
                            }
                        }
                    };
                    ok = M::run(r.head->args()[k], target.args()[k], sigma);
                }
                if (ok) out.push_back(Candidate{ri, std::move(sigma), g});
            }
        }
        return out;
    }

    bool run(const SignedPair& input, std::size_t depth) {
        if (depth > budget.forbidden_depth || ++calls > budget.forbidden_calls) {
            emit(depth, 20, "budget exhausted -> false");
            return false;
        }

        SignedPair closed = signed_closure(program, input, budget.closure_atoms);
        emit(depth, 1, "closure pos = " + to_string(closed.pos) +
                           " neg = " + to_string(closed.neg));

        Interpretation clash = closed.pos.intersect(closed.neg);
        if (!clash.empty()) {
            emit(depth, 3, "contradiction " + to_string(clash) + " -> true");
            return true;
        }

        TermUniverse universe(program, closed.pos, closed.neg);
        std::set<Term> l_terms = carried_terms(closed.pos, closed.neg);

        bool some_forbidden = false;
        const std::vector<Atom>& order = closed.pos.atoms();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Atom& picked = *it;
            if (has_support(picked, program, closed)) continue;
            emit(depth, 5, "pick " + to_string(picked));

            bool atom_forbidden = true;
            for (const Candidate& c : candidates(picked, universe)) {
                const Rule& r = program.rules[c.rule_index];
                emit(depth, 7, "rule " + to_string(r) + " sigma " + to_string(c.sigma) +
                                   " g " + c.g.str());
                Atom ga = c.g.rewrite(picked);
                bool escapes = false;
                for (const Term& arg : ga.args()) {
                    std::vector<Term> subs;
                    arg.collect_subterms(subs);
                    for (const Term& sub : subs)
                        if (!l_terms.count(sub)) escapes = true;
                }
                if (escapes) {
                    emit(depth, 8, "g(a) = " + to_string(ga) +
                                       " features new terms -> not forbidden");
                    atom_forbidden = false;
                    break;
                }

                SignedPair k;
                k.pos = c.g.rewrite(closed.pos);
                k.neg = c.g.rewrite(closed.neg);
                emit(depth, 12,
                     "K+ = " + to_string(k.pos) + " K- = " + to_string(k.neg));

                TermUniverse k_universe(program, k.pos, k.neg);
                for (const Substitution& ext : r_extensions(r, c.sigma, profile, fresh)) {
                    emit(depth, 13, "extension " + to_string(ext));
                    SignedPair j;
                    Interpretation added_pos, added_neg;
                    for (const Atom& a : k.pos.atoms()) j.pos.insert(a);
                    for (const Atom& a : k.neg.atoms()) j.neg.insert(a);
                    for (const Atom& a : r.body_pos) {
                        Atom inst = apply(ext, a);
                        if (k_universe.contains(inst) && j.pos.insert(inst))
                            added_pos.insert(inst);
                    }
                    for (const Atom& a : r.body_neg) {
                        Atom inst = apply(ext, a);
                        if (k_universe.contains(inst) && j.neg.insert(inst))
                            added_neg.insert(inst);
                    }
                    emit(depth, 14, "J+ adds " + to_string(added_pos) + " J- adds " +
                                        to_string(added_neg));
                    atom_forbidden = atom_forbidden && run(j, depth + 1);
                    if (!atom_forbidden) break;
                }
                if (!atom_forbidden) break;
            }
            some_forbidden = some_forbidden || atom_forbidden;
            if (some_forbidden) break;
        }
        emit(depth, 20, some_forbidden ? "return true" : "return false");
        return some_forbidden;
    }
};

}  // namespace

bool is_forbidden(const Program& p, const SignedPair& s, const Budget& b, TraceSink trace) {
    Session session{p, analyze_positions(p), b, std::move(trace)};
    if (session.trace)
        session.emit(0, 0, "reverse application restricted to |B-|=1 and |B+|=1 forms");
    return session.run(s, 0);
}

ForbiddenOracle make_forbidden_oracle(const Program& p, const Budget& b) {
    auto cache = std::make_shared<std::unordered_map<Atom, bool, AtomHash>>();
    const Program* program = &p;
    Budget budget = b;
    return [cache, program, budget](const Atom& a) {
        auto it = cache->find(a);
        if (it != cache->end()) return it->second;
        SignedPair s;
        s.pos.insert(a);
        bool verdict = is_forbidden(*program, s, budget);
        cache->emplace(a, verdict);
        return verdict;
    };
}

}  // namespace aspen
