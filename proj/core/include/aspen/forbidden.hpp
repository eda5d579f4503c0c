#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aspen/consistency.hpp"
#include "aspen/interpretation.hpp"
#include "aspen/positions.hpp"
#include "aspen/program.hpp"
#include "aspen/substitution.hpp"

namespace aspen {

// The (L+, L-) pair threaded through closures and the forbidden check.
struct SignedPair {
    Interpretation pos;
    Interpretation neg;
};

// Atoms whose predicate occurs in the program and whose arguments are
// constants (fresh ones included), ground terms of the program, or terms of
// the carried interpretation (subterms of argument terms).
class TermUniverse {
public:
    TermUniverse(const Program& p, const Interpretation& pos, const Interpretation& neg);

    bool contains(const Atom& a) const;
    bool contains_term(const Term& t) const;  // argument-level membership
    // Ground terms of the program and terms of L, fresh constants excluded;
    // the concrete pool used for completions and fresh-constant images.
    const std::set<Term>& enumerable() const { return enumerable_; }

private:
    std::set<std::string> predicates_;
    std::set<Term> terms_;
    std::set<Term> enumerable_;
};

// Forward rule application: head instances whose positive body lies in lp
// and negative body in ln; when the negative body is a single atom, also its
// instances forced true because positive body holds and the head must be
// false (head instance inside ln).
Interpretation r_plus(const Rule& r, const Interpretation& lp, const Interpretation& ln);

// Backward rule application: empty unless the positive body is a single
// atom; instances of it forced false because head and negative body are
// inside ln. Variables unconstrained by those matches are completed over the
// universe's term pool.
Interpretation r_minus(const Rule& r, const Interpretation& lp, const Interpretation& ln,
                       const TermUniverse& universe);

// Simultaneous least fixpoint of the signed closure recurrences with every
// step intersected with the term-atom universe of the input pair. Backward
// steps are restricted to the inferences the forward traces justify:
// negative-body flips only for rules whose head carries no variables, and
// body negations only from constraints.
SignedPair signed_closure(const Program& p, const SignedPair& s,
                          std::size_t max_atoms = 20000);

// A rule instance derives a with positive body inside s.pos and negative
// body inside s.neg.
bool has_support(const Atom& a, const Program& p, const SignedPair& s);

// Session-scoped fresh constant source.
class FreshCounter {
public:
    Term next() { return Term::fresh(counter_++); }

private:
    std::uint64_t counter_ = 0;
};

// Completions of a head-grounding substitution over body-only positive
// variables: constant-pool branching where the position profile proves
// positions constant-only, one fresh constant otherwise.
std::vector<Substitution> r_extensions(const Rule& r, const Substitution& sigma,
                                       const PositionProfile& profile,
                                       FreshCounter& fresh);

// One line per algorithm step: "DEPTH d | LINE n | <event>".
using TraceSink = std::function<void(const std::string&)>;

// Sound sufficient test that some atom in s.pos occurs in no answer set (or
// s.pos and s.neg already intersect). Budget exhaustion returns false.
bool is_forbidden(const Program& p, const SignedPair& s, const Budget& b,
                  TraceSink trace = nullptr);

// Memoizing oracle handle for level-wise pruning.
ForbiddenOracle make_forbidden_oracle(const Program& p, const Budget& b);

}  // namespace aspen
