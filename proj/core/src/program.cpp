#include "aspen/program.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "aspen/errors.hpp"

namespace aspen {

Builtin Builtin::comparison(Op op, Term lhs, Term rhs) {
    Builtin b;
    b.op = op;
    b.lhs = std::move(lhs);
    b.rhs = std::move(rhs);
    return b;
}

Builtin Builtin::plus_def(Term target, Term base, std::int64_t offset) {
    Builtin b;
    b.op = Op::PlusDef;
    b.target = std::move(target);
    b.base = std::move(base);
    b.offset = offset;
    return b;
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
    if (t.kind() == TermKind::Variable) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end())
            out.push_back(t.name());
        return;
    }
    for (const Term& a : t.args()) collect_vars(a, out);
}

void collect_vars(const Atom& a, std::vector<std::string>& out) {
    for (const Term& t : a.args()) collect_vars(t, out);
}

}  // namespace

bool Rule::is_variable_free() const {
    return variables().empty();
}

std::vector<std::string> Rule::variables() const {
    std::vector<std::string> vars;
    if (head) collect_vars(*head, vars);
    for (const Atom& a : body_pos) collect_vars(a, vars);
    for (const Atom& a : body_neg) collect_vars(a, vars);
    for (const Builtin& b : builtins) {
        collect_vars(b.lhs, vars);
        collect_vars(b.rhs, vars);
        collect_vars(b.target, vars);
        collect_vars(b.base, vars);
    }
    return vars;
}

std::size_t GroundRule::hash() const {
    std::size_t h = head ? head->hash() : 0x517cc1b727220a95ULL;
    for (const Atom& a : body_pos) h ^= a.hash() * 3;
    for (const Atom& a : body_neg) h ^= a.hash() * 7;
    return h;
}

int compare(const GroundRule& a, const GroundRule& b) {
    if (a.head.has_value() != b.head.has_value()) return a.head.has_value() ? 1 : -1;
    if (a.head && b.head)
        if (int c = compare(*a.head, *b.head); c != 0) return c;
    auto cmp_vec = [](const std::vector<Atom>& x, const std::vector<Atom>& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (int c = compare(x[i], y[i]); c != 0) return c;
        return 0;
    };
    if (int c = cmp_vec(a.body_pos, b.body_pos); c != 0) return c;
    return cmp_vec(a.body_neg, b.body_neg);
}

std::set<Term> Program::ground_subterms() const {
    std::set<Term> out;
    auto visit_term = [&](const Term& t, auto&& self) -> void {
        if (t.is_ground()) {
            std::vector<Term> subs;
            t.collect_subterms(subs);
            out.insert(subs.begin(), subs.end());
            return;
        }
        for (const Term& a : t.args()) self(a, self);
    };
    auto visit_atom = [&](const Atom& a) {
        for (const Term& t : a.args()) visit_term(t, visit_term);
    };
    for (const Rule& r : rules) {
        if (r.head) visit_atom(*r.head);
        for (const Atom& a : r.body_pos) visit_atom(a);
        for (const Atom& a : r.body_neg) visit_atom(a);
    }
    return out;
}

void Program::check_safety() const {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = rules[i];
        std::vector<std::string> safe;
        for (const Atom& a : r.body_pos) collect_vars(a, safe);
        // A PlusDef target becomes safe once its base is; iterate to a fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Builtin& b : r.builtins) {
                if (b.op != Builtin::Op::PlusDef) continue;
                std::vector<std::string> base_vars;
                collect_vars(b.base, base_vars);
                bool base_safe = std::all_of(
                    base_vars.begin(), base_vars.end(), [&](const std::string& v) {
                        return std::find(safe.begin(), safe.end(), v) != safe.end();
                    });
                if (!base_safe || b.target.kind() != TermKind::Variable) continue;
                if (std::find(safe.begin(), safe.end(), b.target.name()) == safe.end()) {
                    safe.push_back(b.target.name());
                    changed = true;
                }
            }
        }
        for (const std::string& v : r.variables())
            if (std::find(safe.begin(), safe.end(), v) == safe.end())
                throw UnsafeRule(i, v);
    }
}

}  // namespace aspen
