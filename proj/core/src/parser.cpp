#include "aspen/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace aspen {

namespace {

enum class Tok {
    Ident,     // lowercase-initial identifier
    Var,       // uppercase-initial identifier
    Integer,
    If,        // :-
    Dot,
    Comma,
    LParen,
    RParen,
    Less,
    NotEqual,
    Equal,
    Plus,
    DotDot,
    Not,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token current_;

    int look(std::size_t off = 0) const {
        return pos_ + off < text_.size() ? static_cast<unsigned char>(text_[pos_ + off]) : -1;
    }

    void bump() {
        if (look() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (true) {
            int c = look();
            if (c == '%') {
                while (look() != -1 && look() != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                return;
            }
        }
    }

    void advance() {
        skip_trivia();
        current_.line = line_;
        current_.column = col_;
        int c = look();
        if (c == -1) {
            current_.kind = Tok::End;
            current_.text.clear();
            return;
        }
        if (std::isalpha(c)) {
            std::string s;
            while (std::isalnum(look()) || look() == '_') {
                s.push_back(static_cast<char>(look()));
                bump();
            }
            if (s == "not") {
                current_.kind = Tok::Not;
            } else {
                current_.kind = std::isupper(static_cast<unsigned char>(s[0])) ? Tok::Var : Tok::Ident;
            }
            current_.text = std::move(s);
            return;
        }
        if (std::isdigit(c)) {
            std::int64_t v = 0;
            std::string s;
            while (std::isdigit(look())) {
                s.push_back(static_cast<char>(look()));
                v = v * 10 + (look() - '0');
                bump();
            }
            current_.kind = Tok::Integer;
            current_.text = std::move(s);
            current_.value = v;
            return;
        }
        switch (c) {
            case ':':
                bump();
                if (look() != '-') throw SyntaxError(line_, col_, "expected ':-'");
                bump();
                current_.kind = Tok::If;
                return;
            case '.':
                bump();
                if (look() == '.') {
                    bump();
                    current_.kind = Tok::DotDot;
                } else {
                    current_.kind = Tok::Dot;
                }
                return;
            case ',': bump(); current_.kind = Tok::Comma; return;
            case '(': bump(); current_.kind = Tok::LParen; return;
            case ')': bump(); current_.kind = Tok::RParen; return;
            case '<': bump(); current_.kind = Tok::Less; return;
            case '=': bump(); current_.kind = Tok::Equal; return;
            case '+': bump(); current_.kind = Tok::Plus; return;
            case '!':
                bump();
                if (look() != '=') throw SyntaxError(line_, col_, "expected '!='");
                bump();
                current_.kind = Tok::NotEqual;
                return;
            case '$':
                throw SyntaxError(line_, col_, "'$' prefix is reserved for fresh constants");
            case '_':
                throw SyntaxError(line_, col_, "identifiers may not start with '_'");
            default:
                throw SyntaxError(line_, col_, std::string("unexpected character '") +
                                                   static_cast<char>(c) + "'");
        }
    }
};

// Pre-desugaring argument: a plain term, an interval, or an arithmetic sum.
struct PArg {
    enum class Tag { Plain, Interval, Arith } tag = Tag::Plain;
    Term term;                  // Plain
    std::int64_t lo = 0, hi = 0;  // Interval
    Term base;                  // Arith: base + offset
    std::int64_t offset = 0;
};

struct PAtom {
    std::string predicate;
    std::vector<PArg> args;
    std::size_t line = 1, column = 1;
};

struct PLiteral {
    enum class Tag { Pos, Neg, Builtin } tag = Tag::Pos;
    PAtom atom;
    Builtin::Op op = Builtin::Op::Equal;
    PArg lhs, rhs;
    std::size_t line = 1, column = 1;
};

struct PStatement {
    std::optional<PAtom> head;
    std::vector<PLiteral> body;
    bool has_if = false;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Program run() {
        std::vector<PStatement> statements;
        while (lex_.peek().kind != Tok::End) statements.push_back(statement());
        Program p;
        for (const PStatement& s : statements) assemble(s, p);
        finalize(p);
        return p;
    }

    Atom ground_atom(const Program& context) {
        PAtom pa = atom();
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError(lex_.peek().line, lex_.peek().column, "trailing input after atom");
        Atom a = plain_atom(pa, &context);
        if (!a.is_ground())
            throw SyntaxError(pa.line, pa.column, "atom must be ground");
        return a;
    }

private:
    Lexer lex_;
    std::map<std::string, std::string> canonical_;  // first-letter-folded -> first spelling
    std::size_t rule_counter_ = 0;

    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw SyntaxError(t.line, t.column, msg);
    }

    Token expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind) fail(lex_.peek(), std::string("expected ") + what);
        return lex_.next();
    }

    std::string canonical_predicate(const std::string& name) {
        std::string key = name;
        key[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(key[0])));
        auto [it, inserted] = canonical_.emplace(key, name);
        return it->second;
    }

    PStatement statement() {
        PStatement s;
        if (lex_.peek().kind == Tok::If) {
            lex_.next();
            s.has_if = true;
            s.body = literals();
        } else {
            s.head = atom();
            if (lex_.peek().kind == Tok::If) {
                lex_.next();
                s.has_if = true;
                s.body = literals();
            }
        }
        expect(Tok::Dot, "'.'");
        return s;
    }

    std::vector<PLiteral> literals() {
        std::vector<PLiteral> out;
        out.push_back(literal());
        while (lex_.peek().kind == Tok::Comma) {
            lex_.next();
            out.push_back(literal());
        }
        return out;
    }

    PLiteral literal() {
        PLiteral lit;
        lit.line = lex_.peek().line;
        lit.column = lex_.peek().column;
        if (lex_.peek().kind == Tok::Not) {
            lex_.next();
            lit.tag = PLiteral::Tag::Neg;
            lit.atom = atom();
            return lit;
        }
        // Could be an atom or a comparison between terms; a comparison never
        // starts with '(' and an atom never continues with an operator.
        if (lex_.peek().kind == Tok::Ident) {
            PAtom a = atom();
            Tok k = lex_.peek().kind;
            if (k == Tok::Less || k == Tok::NotEqual || k == Tok::Equal) {
                if (!a.args.empty())
                    fail(lex_.peek(), "compound term on the left of a comparison");
                lit.tag = PLiteral::Tag::Builtin;
                lit.lhs.tag = PArg::Tag::Plain;
                lit.lhs.term = Term::constant(a.predicate);
                lit.op = k == Tok::Less      ? Builtin::Op::Less
                         : k == Tok::NotEqual ? Builtin::Op::NotEqual
                                              : Builtin::Op::Equal;
                lex_.next();
                lit.rhs = arg();
                return lit;
            }
            lit.tag = PLiteral::Tag::Pos;
            lit.atom = std::move(a);
            return lit;
        }
        // Variable or integer: must be a comparison.
        PArg lhs = arg();
        Tok k = lex_.peek().kind;
        if (k != Tok::Less && k != Tok::NotEqual && k != Tok::Equal)
            fail(lex_.peek(), "expected comparison operator");
        lit.tag = PLiteral::Tag::Builtin;
        lit.lhs = lhs;
        lit.op = k == Tok::Less      ? Builtin::Op::Less
                 : k == Tok::NotEqual ? Builtin::Op::NotEqual
                                      : Builtin::Op::Equal;
        lex_.next();
        lit.rhs = arg();
        return lit;
    }

    PAtom atom() {
        Token name = lex_.peek();
        if (name.kind != Tok::Ident && name.kind != Tok::Var)
            fail(name, "expected predicate name");
        lex_.next();
        PAtom a;
        a.predicate = canonical_predicate(name.text);
        a.line = name.line;
        a.column = name.column;
        if (lex_.peek().kind == Tok::LParen) {
            lex_.next();
            a.args.push_back(arg());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                a.args.push_back(arg());
            }
            expect(Tok::RParen, "')'");
        }
        return a;
    }

    // term | integer..integer | term+integer | integer+term
    PArg arg() {
        PArg out;
        Token first = lex_.peek();
        Term t = term();
        if (lex_.peek().kind == Tok::DotDot) {
            if (t.kind() != TermKind::Integer)
                fail(first, "interval bounds must be integers");
            lex_.next();
            Token hi = expect(Tok::Integer, "integer");
            if (hi.value < t.value()) fail(hi, "empty interval");
            out.tag = PArg::Tag::Interval;
            out.lo = t.value();
            out.hi = hi.value;
            return out;
        }
        if (lex_.peek().kind == Tok::Plus) {
            lex_.next();
            Token second = lex_.peek();
            Term u = term();
            if (t.kind() == TermKind::Integer && u.kind() == TermKind::Integer) {
                out.term = Term::integer(t.value() + u.value());
                return out;
            }
            if (u.kind() == TermKind::Integer) {
                out.tag = PArg::Tag::Arith;
                out.base = t;
                out.offset = u.value();
                return out;
            }
            if (t.kind() == TermKind::Integer) {
                out.tag = PArg::Tag::Arith;
                out.base = u;
                out.offset = t.value();
                return out;
            }
            fail(second, "one side of '+' must be an integer");
        }
        out.term = t;
        return out;
    }

    Term term() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Integer:
                lex_.next();
                return Term::integer(t.value);
            case Tok::Var:
                lex_.next();
                return Term::variable(t.text);
            case Tok::Ident: {
                lex_.next();
                if (lex_.peek().kind == Tok::LParen) {
                    lex_.next();
                    std::vector<Term> args;
                    args.push_back(term());
                    while (lex_.peek().kind == Tok::Comma) {
                        lex_.next();
                        args.push_back(term());
                    }
                    expect(Tok::RParen, "')'");
                    return Term::function(t.text, std::move(args));
                }
                return Term::constant(t.text);
            }
            default:
                fail(t, "expected term");
        }
    }

    Atom plain_atom(const PAtom& pa, const Program* context) {
        std::string pred = pa.predicate;
        if (context) {
            std::string key = pred;
            key[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(key[0])));
            for (const auto& [name, arity] : context->symbols.predicate_arity) {
                std::string k = name;
                k[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(k[0])));
                if (k == key) {
                    pred = name;
                    break;
                }
            }
        }
        std::vector<Term> args;
        for (const PArg& a : pa.args) {
            if (a.tag != PArg::Tag::Plain)
                throw SyntaxError(pa.line, pa.column, "interval or arithmetic not allowed here");
            args.push_back(a.term);
        }
        return Atom(pred, std::move(args));
    }

    void assemble(const PStatement& s, Program& p) {
        bool is_fact = s.head && !s.has_if;
        bool head_has_interval = false;
        if (s.head)
            for (const PArg& a : s.head->args)
                if (a.tag == PArg::Tag::Interval) head_has_interval = true;
        if (head_has_interval && !is_fact)
            throw SyntaxError(s.head->line, s.head->column, "intervals are only allowed in facts");

        if (head_has_interval) {
            expand_intervals(*s.head, 0, std::vector<Term>{}, p);
            return;
        }

        Rule r;
        std::size_t aux = 0;
        auto desugared = [&](const PAtom& pa) {
            std::vector<Term> args;
            for (const PArg& a : pa.args) {
                switch (a.tag) {
                    case PArg::Tag::Plain: args.push_back(a.term); break;
                    case PArg::Tag::Interval:
                        throw SyntaxError(pa.line, pa.column, "intervals are only allowed in facts");
                    case PArg::Tag::Arith: {
                        if (a.base.is_ground() && a.base.kind() == TermKind::Integer) {
                            args.push_back(Term::integer(a.base.value() + a.offset));
                            break;
                        }
                        Term v = Term::variable("_A" + std::to_string(aux++));
                        r.builtins.push_back(Builtin::plus_def(v, a.base, a.offset));
                        args.push_back(v);
                        break;
                    }
                }
            }
            return Atom(pa.predicate, std::move(args));
        };

        if (s.head) r.head = desugared(*s.head);
        for (const PLiteral& lit : s.body) {
            switch (lit.tag) {
                case PLiteral::Tag::Pos: r.body_pos.push_back(desugared(lit.atom)); break;
                case PLiteral::Tag::Neg: r.body_neg.push_back(desugared(lit.atom)); break;
                case PLiteral::Tag::Builtin: {
                    auto plain = [&](const PArg& a) {
                        if (a.tag != PArg::Tag::Plain)
                            throw SyntaxError(lit.line, lit.column,
                                              "interval or arithmetic not allowed in comparisons");
                        return a.term;
                    };
                    r.builtins.push_back(
                        Builtin::comparison(lit.op, plain(lit.lhs), plain(lit.rhs)));
                    break;
                }
            }
        }
        p.rules.push_back(std::move(r));
        ++rule_counter_;
    }

    void expand_intervals(const PAtom& head, std::size_t idx, std::vector<Term> prefix,
                          Program& p) {
        if (idx == head.args.size()) {
            Rule r;
            r.head = Atom(head.predicate, prefix);
            p.rules.push_back(std::move(r));
            return;
        }
        const PArg& a = head.args[idx];
        if (a.tag == PArg::Tag::Interval) {
            for (std::int64_t v = a.lo; v <= a.hi; ++v) {
                prefix.push_back(Term::integer(v));
                expand_intervals(head, idx + 1, prefix, p);
                prefix.pop_back();
            }
        } else if (a.tag == PArg::Tag::Plain) {
            prefix.push_back(a.term);
            expand_intervals(head, idx + 1, prefix, p);
            prefix.pop_back();
        } else {
            throw SyntaxError(head.line, head.column, "arithmetic not allowed in interval facts");
        }
    }

    void finalize(Program& p) {
        auto record_term = [&](const Term& t, auto&& self) -> void {
            switch (t.kind()) {
                case TermKind::Constant:
                case TermKind::Integer: p.constants.insert(t); break;
                case TermKind::Function: {
                    auto [it, inserted] =
                        p.symbols.function_arity.emplace(t.name(), t.args().size());
                    if (!inserted && it->second != t.args().size())
                        throw ArityMismatch(t.name());
                    for (const Term& a : t.args()) self(a, self);
                    break;
                }
                default: break;
            }
        };
        auto record_atom = [&](const Atom& a) {
            auto [it, inserted] = p.symbols.predicate_arity.emplace(a.predicate(), a.arity());
            if (!inserted && it->second != a.arity()) throw ArityMismatch(a.predicate());
            for (const Term& t : a.args()) record_term(t, record_term);
        };
        for (const Rule& r : p.rules) {
            if (r.head) record_atom(*r.head);
            for (const Atom& a : r.body_pos) record_atom(a);
            for (const Atom& a : r.body_neg) record_atom(a);
            for (const Builtin& b : r.builtins) {
                record_term(b.lhs, record_term);
                record_term(b.rhs, record_term);
                record_term(b.base, record_term);
            }
        }
        p.check_safety();
    }
};

}  // namespace

Program parse_program(std::string_view text) {
    Parser parser(text);
    return parser.run();
}

Atom parse_ground_atom(std::string_view text, const Program& context) {
    Parser parser(text);
    return parser.ground_atom(context);
}

}  // namespace aspen
