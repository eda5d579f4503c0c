#include "aspen/atom.hpp"

#include <algorithm>
#include <functional>

namespace aspen {

Atom::Atom(std::string predicate, std::vector<Term> args)
    : predicate_(std::move(predicate)), args_(std::move(args)) {
    std::size_t h = std::hash<std::string>{}(predicate_);
    for (const Term& t : args_)
        h ^= t.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    hash_ = h;
}

bool Atom::is_ground() const {
    return std::all_of(args_.begin(), args_.end(),
                       [](const Term& t) { return t.is_ground(); });
}

bool Atom::has_fresh() const {
    return std::any_of(args_.begin(), args_.end(),
                       [](const Term& t) { return t.has_fresh(); });
}

int Atom::max_arg_depth() const {
    int d = 0;
    for (const Term& t : args_) d = std::max(d, t.depth());
    return d;
}

bool operator==(const Atom& a, const Atom& b) {
    return a.hash_ == b.hash_ && a.predicate_ == b.predicate_ && a.args_ == b.args_;
}

int compare(const Atom& a, const Atom& b) {
    if (int c = a.predicate().compare(b.predicate()); c != 0) return c;
    if (a.args().size() != b.args().size())
        return a.args().size() < b.args().size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = compare(a.args()[i], b.args()[i]); c != 0) return c;
    return 0;
}

}  // namespace aspen
