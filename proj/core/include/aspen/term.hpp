#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace aspen {

enum class TermKind { Constant, Integer, FreshConstant, Function, Variable };

// Immutable first-order term. Fresh constants are produced only by the
// forbidden-atom analysis and print with a reserved "$c" prefix the parser
// rejects, so they can never be re-introduced through input.
class Term {
public:
    Term() { rehash(); }  // the empty constant

    static Term constant(std::string name);
    static Term integer(std::int64_t value);
    static Term fresh(std::uint64_t id);
    static Term variable(std::string name);
    static Term function(std::string symbol, std::vector<Term> args);

    TermKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::int64_t value() const { return value_; }
    std::uint64_t fresh_id() const { return id_; }
    const std::vector<Term>& args() const { return args_; }

    bool is_constant_like() const;  // constant, integer, or fresh constant
    bool is_ground() const;         // no variable occurs
    bool has_fresh() const;
    int depth() const;              // 0 for leaves, 1 + max over args otherwise

    // Appends every subterm including the term itself.
    void collect_subterms(std::vector<Term>& out) const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    TermKind kind_ = TermKind::Constant;
    std::string name_;
    std::int64_t value_ = 0;
    std::uint64_t id_ = 0;
    std::vector<Term> args_;
    std::size_t hash_ = 0;

    void rehash();
};

// Total order: constants < integers < fresh constants < functional terms,
// each lexicographic/structural; variables sort last.
int compare(const Term& a, const Term& b);
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

}  // namespace aspen
