#include "aspen/interpretation.hpp"

#include <algorithm>

#include "aspen/printer.hpp"

namespace aspen {

Interpretation::Interpretation(std::initializer_list<Atom> atoms) {
    for (const Atom& a : atoms) insert(a);
}

bool Interpretation::insert(const Atom& a) {
    if (!index_.insert(a).second) return false;
    order_.push_back(a);
    return true;
}

std::vector<Atom> Interpretation::sorted() const {
    std::vector<Atom> out = order_;
    std::sort(out.begin(), out.end());
    return out;
}

bool Interpretation::subset_of(const Interpretation& other) const {
    return std::all_of(order_.begin(), order_.end(),
                       [&](const Atom& a) { return other.contains(a); });
}

bool Interpretation::disjoint_with(const Interpretation& other) const {
    const Interpretation& small = size() <= other.size() ? *this : other;
    const Interpretation& large = size() <= other.size() ? other : *this;
    return std::none_of(small.order_.begin(), small.order_.end(),
                        [&](const Atom& a) { return large.contains(a); });
}

Interpretation Interpretation::intersect(const Interpretation& other) const {
    Interpretation out;
    for (const Atom& a : order_)
        if (other.contains(a)) out.insert(a);
    return out;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.size() == b.size() && a.subset_of(b);
}

std::string to_string(const Interpretation& i) { return atom_set_to_string(i.atoms()); }

}  // namespace aspen
