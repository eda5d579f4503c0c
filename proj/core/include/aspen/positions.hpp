#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "aspen/program.hpp"

namespace aspen {

// Which terms can reach each predicate argument position, derived from the
// positive part of the program only. When allows_functional is false the
// pool is the set of constants derivably reachable there; over-approximation
// is permitted only towards allows_functional.
struct PositionInfo {
    bool allows_functional = false;
    std::set<Term> constant_pool;
};

class PositionProfile {
public:
    using Key = std::pair<std::string, std::size_t>;  // predicate, argument index

    const PositionInfo& at(const std::string& predicate, std::size_t index) const;
    PositionInfo& slot(const std::string& predicate, std::size_t index);
    const std::map<Key, PositionInfo>& positions() const { return positions_; }

    // True when the ground atom's arguments fit the profile.
    bool conforms(const Atom& a) const;

private:
    std::map<Key, PositionInfo> positions_;
    static const PositionInfo empty_;
};

PositionProfile analyze_positions(const Program& p);

}  // namespace aspen
