#include "aspen/term.hpp"

#include <algorithm>
#include <functional>

namespace aspen {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

void Term::rehash() {
    std::size_t h = static_cast<std::size_t>(kind_);
    h = mix(h, std::hash<std::string>{}(name_));
    h = mix(h, std::hash<std::int64_t>{}(value_));
    h = mix(h, std::hash<std::uint64_t>{}(id_));
    for (const Term& a : args_) h = mix(h, a.hash());
    hash_ = h;
}

Term Term::constant(std::string name) {
    Term t;
    t.kind_ = TermKind::Constant;
    t.name_ = std::move(name);
    t.rehash();
    return t;
}

Term Term::integer(std::int64_t value) {
    Term t;
    t.kind_ = TermKind::Integer;
    t.value_ = value;
    t.rehash();
    return t;
}

Term Term::fresh(std::uint64_t id) {
    Term t;
    t.kind_ = TermKind::FreshConstant;
    t.id_ = id;
    t.rehash();
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind_ = TermKind::Variable;
    t.name_ = std::move(name);
    t.rehash();
    return t;
}

Term Term::function(std::string symbol, std::vector<Term> args) {
    Term t;
    t.kind_ = TermKind::Function;
    t.name_ = std::move(symbol);
    t.args_ = std::move(args);
    t.rehash();
    return t;
}

bool Term::is_constant_like() const {
    return kind_ == TermKind::Constant || kind_ == TermKind::Integer ||
           kind_ == TermKind::FreshConstant;
}

bool Term::is_ground() const {
    if (kind_ == TermKind::Variable) return false;
    return std::all_of(args_.begin(), args_.end(),
                       [](const Term& a) { return a.is_ground(); });
}

bool Term::has_fresh() const {
    if (kind_ == TermKind::FreshConstant) return true;
    return std::any_of(args_.begin(), args_.end(),
                       [](const Term& a) { return a.has_fresh(); });
}

int Term::depth() const {
    if (args_.empty()) return 0;
    int d = 0;
    for (const Term& a : args_) d = std::max(d, a.depth());
    return d + 1;
}

void Term::collect_subterms(std::vector<Term>& out) const {
    out.push_back(*this);
    for (const Term& a : args_) a.collect_subterms(out);
}

bool operator==(const Term& a, const Term& b) {
    if (a.hash_ != b.hash_ || a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case TermKind::Constant:
        case TermKind::Variable: return a.name_ == b.name_;
        case TermKind::Integer: return a.value_ == b.value_;
        case TermKind::FreshConstant: return a.id_ == b.id_;
        case TermKind::Function: return a.name_ == b.name_ && a.args_ == b.args_;
    }
    return false;
}

int compare(const Term& a, const Term& b) {
    auto rank = [](TermKind k) {
        switch (k) {
            case TermKind::Constant: return 0;
            case TermKind::Integer: return 1;
            case TermKind::FreshConstant: return 2;
            case TermKind::Function: return 3;
            case TermKind::Variable: return 4;
        }
        return 5;
    };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case TermKind::Constant:
        case TermKind::Variable:
            return a.name().compare(b.name());
        case TermKind::Integer:
            if (a.value() != b.value()) return a.value() < b.value() ? -1 : 1;
            return 0;
        case TermKind::FreshConstant:
            if (a.fresh_id() != b.fresh_id()) return a.fresh_id() < b.fresh_id() ? -1 : 1;
            return 0;
        case TermKind::Function: {
            if (int c = a.name().compare(b.name()); c != 0) return c;
            if (a.args().size() != b.args().size())
                return a.args().size() < b.args().size() ? -1 : 1;
            for (std::size_t i = 0; i < a.args().size(); ++i)
                if (int c = compare(a.args()[i], b.args()[i]); c != 0) return c;
            return 0;
        }
    }
    return 0;
}

}  // namespace aspen
