#pragma once

#include <map>
#include <optional>
#include <string>

#include "aspen/program.hpp"

namespace aspen {

// Partial map from variable names to ground terms.
class Substitution {
public:
    // Returns false if the variable is already bound to a different term.
    bool bind(const std::string& var, const Term& value);
    const Term* lookup(const std::string& var) const;
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const std::map<std::string, Term>& mapping() const { return map_; }

    friend bool operator==(const Substitution& a, const Substitution& b) {
        return a.map_ == b.map_;
    }
    friend bool operator<(const Substitution& a, const Substitution& b);

private:
    std::map<std::string, Term> map_;
};

Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);
Rule apply(const Substitution& s, const Rule& r);

std::string to_string(const Substitution& s);  // "[X/a, Y/f(b)]"

}  // namespace aspen
