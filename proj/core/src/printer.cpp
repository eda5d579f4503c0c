#include "aspen/printer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace aspen {

namespace {

// Auxiliary variables introduced while desugaring arithmetic print back as
// `base+offset` so parse/print round-trips on sugared input.
struct Resugar {
    std::map<std::string, std::string> subst;
};

void print_term(std::ostringstream& os, const Term& t, const Resugar* rs) {
    switch (t.kind()) {
        case TermKind::Constant: os << t.name(); return;
        case TermKind::Integer: os << t.value(); return;
        case TermKind::FreshConstant: os << "$c" << t.fresh_id(); return;
        case TermKind::Variable: {
            if (rs) {
                auto it = rs->subst.find(t.name());
                if (it != rs->subst.end()) {
                    os << it->second;
                    return;
                }
            }
            os << t.name();
            return;
        }
        case TermKind::Function: {
            os << t.name() << "(";
            for (std::size_t i = 0; i < t.args().size(); ++i) {
                if (i) os << ",";
                print_term(os, t.args()[i], rs);
            }
            os << ")";
            return;
        }
    }
}

void print_atom(std::ostringstream& os, const Atom& a, const Resugar* rs) {
    os << a.predicate();
    if (!a.args().empty()) {
        os << "(";
        for (std::size_t i = 0; i < a.args().size(); ++i) {
            if (i) os << ",";
            print_term(os, a.args()[i], rs);
        }
        os << ")";
    }
}

std::string term_str(const Term& t, const Resugar* rs) {
    std::ostringstream os;
    print_term(os, t, rs);
    return os.str();
}

}  // namespace

std::string to_string(const Term& t) { return term_str(t, nullptr); }

std::string to_string(const Atom& a) {
    std::ostringstream os;
    print_atom(os, a, nullptr);
    return os.str();
}

std::string to_string(const Rule& r) {
    Resugar rs;
    for (const Builtin& b : r.builtins) {
        if (b.op == Builtin::Op::PlusDef && b.target.kind() == TermKind::Variable &&
            b.target.name().rfind("_A", 0) == 0) {
            rs.subst[b.target.name()] = term_str(b.base, &rs) + "+" + std::to_string(b.offset);
        }
    }
    std::ostringstream os;
    bool have_body = false;
    auto sep = [&] {
        if (!have_body) {
            os << " :- ";
            have_body = true;
        } else {
            os << ", ";
        }
    };
    if (r.head) print_atom(os, *r.head, &rs);
    if (r.head && r.body_pos.empty() && r.body_neg.empty() && r.builtins.empty()) {
        os << ".";
        return os.str();
    }
    if (!r.head) {
        os << ":- ";
        have_body = true;
        bool first = true;
        for (const Atom& a : r.body_pos) {
            if (!first) os << ", ";
            first = false;
            print_atom(os, a, &rs);
        }
        for (const Atom& a : r.body_neg) {
            if (!first) os << ", ";
            first = false;
            os << "not ";
            print_atom(os, a, &rs);
        }
        for (const Builtin& b : r.builtins) {
            if (b.op == Builtin::Op::PlusDef && rs.subst.count(b.target.name())) continue;
            if (!first) os << ", ";
            first = false;
            const char* op = b.op == Builtin::Op::Less        ? " < "
                             : b.op == Builtin::Op::NotEqual  ? " != "
                                                              : " = ";
            if (b.op == Builtin::Op::PlusDef)
                os << term_str(b.target, &rs) << " = " << term_str(b.base, &rs) << "+"
                   << b.offset;
            else
                os << term_str(b.lhs, &rs) << op << term_str(b.rhs, &rs);
        }
        os << ".";
        return os.str();
    }
    for (const Atom& a : r.body_pos) {
        sep();
        print_atom(os, a, &rs);
    }
    for (const Atom& a : r.body_neg) {
        sep();
        os << "not ";
        print_atom(os, a, &rs);
    }
    for (const Builtin& b : r.builtins) {
        if (b.op == Builtin::Op::PlusDef && rs.subst.count(b.target.name())) continue;
        sep();
        if (b.op == Builtin::Op::PlusDef) {
            os << term_str(b.target, &rs) << " = " << term_str(b.base, &rs) << "+" << b.offset;
        } else {
            const char* op = b.op == Builtin::Op::Less       ? " < "
                             : b.op == Builtin::Op::NotEqual ? " != "
                                                             : " = ";
            os << term_str(b.lhs, &rs) << op << term_str(b.rhs, &rs);
        }
    }
    os << ".";
    return os.str();
}

std::string to_string(const GroundRule& r) {
    std::ostringstream os;
    if (r.head) print_atom(os, *r.head, nullptr);
    if (r.head && r.body_pos.empty() && r.body_neg.empty()) {
        os << ".";
        return os.str();
    }
    os << (r.head ? " :- " : ":- ");
    bool first = true;
    for (const Atom& a : r.body_pos) {
        if (!first) os << ", ";
        first = false;
        print_atom(os, a, nullptr);
    }
    for (const Atom& a : r.body_neg) {
        if (!first) os << ", ";
        first = false;
        os << "not ";
        print_atom(os, a, nullptr);
    }
    os << ".";
    return os.str();
}

std::string to_string(const Program& p) {
    std::ostringstream os;
    for (const Rule& r : p.rules) os << to_string(r) << "\n";
    return os.str();
}

std::string atom_set_to_string(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) os << ", ";
        os << to_string(atoms[i]);
    }
    os << "}";
    return os.str();
}

}  // namespace aspen
