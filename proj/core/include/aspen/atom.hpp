#pragma once

#include <string>
#include <vector>

#include "aspen/term.hpp"

namespace aspen {

class Atom {
public:
    Atom() = default;
    Atom(std::string predicate, std::vector<Term> args = {});

    const std::string& predicate() const { return predicate_; }
    const std::vector<Term>& args() const { return args_; }
    std::size_t arity() const { return args_.size(); }

    bool is_ground() const;
    bool has_fresh() const;
    int max_arg_depth() const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const Atom& a, const Atom& b);
    friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }

private:
    std::string predicate_;
    std::vector<Term> args_;
    std::size_t hash_ = 0;
};

// Predicate name first, then argument terms lexicographically.
int compare(const Atom& a, const Atom& b);
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

struct AtomHash {
    std::size_t operator()(const Atom& a) const { return a.hash(); }
};

}  // namespace aspen
