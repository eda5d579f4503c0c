#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "aspen/program.hpp"

namespace aspen {

struct TilingSystem {
    std::vector<std::string> tiles;
    std::set<std::pair<std::string, std::string>> hi;  // horizontally incompatible
    std::set<std::pair<std::string, std::string>> vi;  // vertically incompatible
    std::string start_tile;
};

// Total assignment of tiles to a width x height rectangle; column 0 is the
// left edge, row 0 the bottom.
struct FiniteGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::string> cells;  // row-major

    const std::string& at(std::size_t col, std::size_t row) const {
        return cells[row * width + col];
    }
};

struct TuringMachine {
    std::vector<std::string> states;
    std::string start, accept, reject;
    // (state, read) -> (state, write, move); symbols 0/1/B, moves L/R.
    std::map<std::pair<std::string, char>, std::tuple<std::string, char, char>> delta;
};

// Name fragments embedded into predicate names, reversibly: alphanumerics
// pass through, '_' doubles, anything else becomes _x<hex><hex>.
std::string sanitize_name(const std::string& name);

// One domain fact plus the grid-growth, tile-choice, incompatibility, and
// recurrence rules of the tiling encoding.
Program tiling_to_program(const TilingSystem& t);

// No horizontally adjacent pair in hi, no vertically adjacent pair in vi.
bool check_grid(const TilingSystem& t, const FiniteGrid& g);

// The machine-emulation program; without fixed_input the program guesses
// every finite word, with it the word is laid down as ground facts.
Program tm_to_program(const TuringMachine& m,
                      const std::optional<std::string>& fixed_input = {});

// Text formats: `tiles:`/`start:`/`hi:`/`vi:` and
// `states:`/`start:`/`accept:`/`reject:`/`delta:` sections, one per line.
TilingSystem parse_tiling_spec(std::string_view text);
TuringMachine parse_tm_spec(std::string_view text);

}  // namespace aspen
