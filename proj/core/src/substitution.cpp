#include "aspen/substitution.hpp"

#include <sstream>

#include "aspen/printer.hpp"

namespace aspen {

bool Substitution::bind(const std::string& var, const Term& value) {
    auto [it, inserted] = map_.emplace(var, value);
    return inserted || it->second == value;
}

const Term* Substitution::lookup(const std::string& var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

bool operator<(const Substitution& a, const Substitution& b) {
    auto ia = a.map_.begin(), ib = b.map_.begin();
    for (; ia != a.map_.end() && ib != b.map_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (int c = compare(ia->second, ib->second); c != 0) return c < 0;
    }
    return ia == a.map_.end() && ib != b.map_.end();
}

Term apply(const Substitution& s, const Term& t) {
    switch (t.kind()) {
        case TermKind::Variable: {
            const Term* v = s.lookup(t.name());
            return v ? *v : t;
        }
        case TermKind::Function: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const Term& a : t.args()) args.push_back(apply(s, a));
            return Term::function(t.name(), std::move(args));
        }
        default:
            return t;
    }
}

Atom apply(const Substitution& s, const Atom& a) {
    std::vector<Term> args;
    args.reserve(a.args().size());
    for (const Term& t : a.args()) args.push_back(apply(s, t));
    return Atom(a.predicate(), std::move(args));
}

Rule apply(const Substitution& s, const Rule& r) {
    Rule out;
    if (r.head) out.head = apply(s, *r.head);
    for (const Atom& a : r.body_pos) out.body_pos.push_back(apply(s, a));
    for (const Atom& a : r.body_neg) out.body_neg.push_back(apply(s, a));
    for (const Builtin& b : r.builtins) {
        Builtin nb = b;
        nb.lhs = apply(s, b.lhs);
        nb.rhs = apply(s, b.rhs);
        nb.target = apply(s, b.target);
        nb.base = apply(s, b.base);
        out.builtins.push_back(std::move(nb));
    }
    return out;
}

std::string to_string(const Substitution& s) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [var, term] : s.mapping()) {
        if (!first) os << ", ";
        first = false;
        os << var << "/" << to_string(term);
    }
    os << "]";
    return os.str();
}

}  // namespace aspen
