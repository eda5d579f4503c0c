#pragma once

#include <string>
#include <vector>

#include "aspen/program.hpp"

namespace aspen {

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Rule& r);
std::string to_string(const GroundRule& r);
std::string to_string(const Program& p);

// "{a, b, c}" with the atoms in canonical term order.
std::string atom_set_to_string(std::vector<Atom> atoms);

}  // namespace aspen
