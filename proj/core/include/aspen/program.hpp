#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aspen/atom.hpp"
#include "aspen/term.hpp"

namespace aspen {

// Comparison and arithmetic literals. They are evaluated away during
// grounding and never stored in interpretations. PlusDef binds `target`
// to `base + offset` once `base` is ground to an integer; it is what
// `N+1` desugars to, so no arithmetic term survives parsing.
struct Builtin {
    enum class Op { Less, NotEqual, Equal, PlusDef };
    Op op = Op::Equal;
    Term lhs;   // comparisons
    Term rhs;
    Term target;  // PlusDef
    Term base;
    std::int64_t offset = 0;

    static Builtin comparison(Op op, Term lhs, Term rhs);
    static Builtin plus_def(Term target, Term base, std::int64_t offset);
};

struct Rule {
    std::optional<Atom> head;
    std::vector<Atom> body_pos;
    std::vector<Atom> body_neg;
    std::vector<Builtin> builtins;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const {
        return head && body_pos.empty() && body_neg.empty() && builtins.empty();
    }
    bool is_variable_free() const;
    // Variables in order of first occurrence (head, positive body, negative body).
    std::vector<std::string> variables() const;
};

struct GroundRule {
    std::optional<Atom> head;
    std::vector<Atom> body_pos;
    std::vector<Atom> body_neg;

    bool is_constraint() const { return !head.has_value(); }
    std::size_t hash() const;
    friend bool operator==(const GroundRule& a, const GroundRule& b) {
        return a.head == b.head && a.body_pos == b.body_pos && a.body_neg == b.body_neg;
    }
};

int compare(const GroundRule& a, const GroundRule& b);
inline bool operator<(const GroundRule& a, const GroundRule& b) { return compare(a, b) < 0; }

struct GroundRuleHash {
    std::size_t operator()(const GroundRule& r) const { return r.hash(); }
};

struct SymbolTable {
    std::map<std::string, std::size_t> predicate_arity;
    std::map<std::string, std::size_t> function_arity;
};

struct Program {
    std::vector<Rule> rules;
    SymbolTable symbols;
    std::set<Term> constants;  // constants and integers occurring in the rules

    // Every ground term occurring syntactically in a rule, closed under subterms.
    std::set<Term> ground_subterms() const;
    // Safety: every variable occurs in a positive body atom or is defined by a
    // PlusDef chain rooted in one. Throws UnsafeRule.
    void check_safety() const;
};

}  // namespace aspen
