#pragma once

#include <initializer_list>
#include <unordered_set>
#include <vector>

#include "aspen/atom.hpp"

namespace aspen {

// Finite set of ground atoms with constant-time membership. Iteration order
// is insertion order, which the forbidden-atom analysis relies on to pick
// the most recently derived unsupported atom first.
class Interpretation {
public:
    Interpretation() = default;
    Interpretation(std::initializer_list<Atom> atoms);

    bool contains(const Atom& a) const { return index_.count(a) != 0; }
    bool insert(const Atom& a);
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }

    const std::vector<Atom>& atoms() const { return order_; }  // insertion order
    std::vector<Atom> sorted() const;

    bool subset_of(const Interpretation& other) const;
    bool disjoint_with(const Interpretation& other) const;
    Interpretation intersect(const Interpretation& other) const;

    // Set equality, insertion order ignored.
    friend bool operator==(const Interpretation& a, const Interpretation& b);
    friend bool operator!=(const Interpretation& a, const Interpretation& b) {
        return !(a == b);
    }

private:
    std::vector<Atom> order_;
    std::unordered_set<Atom, AtomHash> index_;
};

std::string to_string(const Interpretation& i);  // sorted "{a, b}"

}  // namespace aspen
