#include "aspen/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "aspen/errors.hpp"
#include "aspen/parser.hpp"

namespace aspen {

std::string sanitize_name(const std::string& name) {
    std::ostringstream os;
    for (unsigned char c : name) {
        if (std::isalnum(c)) {
            os << c;
        } else if (c == '_') {
            os << "__";
        } else {
            static const char* hex = "0123456789abcdef";
            os << "_x" << hex[c >> 4] << hex[c & 0xf];
        }
    }
    return os.str();
}

Program tiling_to_program(const TilingSystem& t) {
    std::ostringstream os;
    auto tile_pred = [](const std::string& tile) { return "Tile_" + sanitize_name(tile); };
    std::string below = "Below_" + sanitize_name(t.start_tile);

    os << "Dom(c0).\n";
    os << "Dom(s(X)) :- Dom(X).\n";
    for (const std::string& tile : t.tiles) {
        os << tile_pred(tile) << "(X,Y) :- Dom(X), Dom(Y)";
        for (const std::string& other : t.tiles)
            if (other != tile) os << ", not " << tile_pred(other) << "(X,Y)";
        os << ".\n";
    }
    for (const auto& [a, b] : t.hi)
        os << ":- " << tile_pred(a) << "(X,Y), " << tile_pred(b) << "(s(X),Y).\n";
    for (const auto& [a, b] : t.vi)
        os << ":- " << tile_pred(a) << "(X,Y), " << tile_pred(b) << "(X,s(Y)).\n";
    os << below << "(Y) :- " << tile_pred(t.start_tile) << "(c0,s(Y)).\n";
    os << below << "(Y) :- " << below << "(s(Y)).\n";
    os << ":- Dom(Y), not " << below << "(Y).\n";
    return parse_program(os.str());
}

bool check_grid(const TilingSystem& t, const FiniteGrid& g) {
    for (std::size_t row = 0; row < g.height; ++row) {
        for (std::size_t col = 0; col < g.width; ++col) {
            if (col + 1 < g.width &&
                t.hi.count({g.at(col, row), g.at(col + 1, row)}))
                return false;
            if (row + 1 < g.height &&
                t.vi.count({g.at(col, row), g.at(col, row + 1)}))
                return false;
        }
    }
    return true;
}

Program tm_to_program(const TuringMachine& m,
                      const std::optional<std::string>& fixed_input) {
    std::ostringstream os;
    auto head_pred = [](const std::string& q) { return "H_" + sanitize_name(q); };
    auto sym_pred = [](char a) { return std::string("S_") + a; };

    os << head_pred(m.start) << "(c).\n";
    if (!fixed_input) {
        os << "Input(c).\n";
        os << "Right(X,r(X)) :- Input(X), not Last(X).\n";
        os << "Last(X) :- Input(X), not Right(X,r(X)).\n";
        os << "Input(r(X)) :- Input(X), Right(X,r(X)).\n";
        os << "FiniteInput :- Input(X), Last(X).\n";
        os << ":- not FiniteInput.\n";
        os << "S_B(X) :- Last(X).\n";
        os << "S_0(X) :- Input(X), not S_1(X), not S_B(X).\n";
        os << "S_1(X) :- Input(X), not S_0(X), not S_B(X).\n";
    } else {
        // The word is laid down directly: cell symbols, the tape adjacency,
        // its right end, and the terminating blank.
        std::string cell = "c";
        for (char w : *fixed_input) {
            if (w != '0' && w != '1')
                throw SyntaxError(0, 0, "fixed input must be a binary word");
            os << sym_pred(w) << "(" << cell << ").\n";
            os << "Right(" << cell << ",r(" << cell << ")).\n";
            cell = "r(" + cell + ")";
        }
        os << "S_B(" << cell << ").\n";
        os << "Last(" << cell << ").\n";
        os << "S_B(X) :- Last(X).\n";
    }
    os << "Step(Y,s(Y)) :- Right(X,Y), Step(X,s(X)).\n";
    os << "Step(Y,s(Y)) :- Right(Y,X), Step(X,s(X)).\n";
    os << "Right(s(X),s(Y)) :- Step(X,s(X)), Right(X,Y).\n";
    os << "Right(s(X),r(s(X))) :- Step(X,s(X)), Last(X).\n";
    os << "Last(r(s(X))) :- Step(X,s(X)), Last(X).\n";
    os << "Halt :- " << head_pred(m.accept) << "(X).\n";
    os << "Halt :- " << head_pred(m.reject) << "(X).\n";
    os << ":- not Halt.\n";
    for (const std::string& q : m.states)
        if (q != m.accept && q != m.reject)
            os << "Step(X,s(X)) :- " << head_pred(q) << "(X).\n";
    for (char a : {'0', '1', 'B'}) {
        os << sym_pred(a) << "(s(X)) :- ";
        for (const std::string& q : m.states) os << "not " << head_pred(q) << "(X), ";
        os << sym_pred(a) << "(X), Step(X,s(X)).\n";
    }
    for (const auto& [key, value] : m.delta) {
        const auto& [q, a] = key;
        char write = std::get<1>(value);
        os << sym_pred(write) << "(s(X)) :- " << head_pred(q) << "(X), " << sym_pred(a)
           << "(X).\n";
    }
    for (const auto& [key, value] : m.delta) {
        const auto& [q, a] = key;
        const std::string& to = std::get<0>(value);
        char move = std::get<2>(value);
        if (move == 'L') {
            os << head_pred(to) << "(Y) :- Right(Y,s(X)), " << head_pred(q) << "(X), "
               << sym_pred(a) << "(X).\n";
            os << "NotFirst(X) :- Right(Y,X), " << head_pred(q) << "(X), " << sym_pred(a)
               << "(X).\n";
            os << head_pred(to) << "(s(X)) :- not NotFirst(X), " << head_pred(q) << "(X), "
               << sym_pred(a) << "(X).\n";
        } else {
            os << head_pred(to) << "(Y) :- Right(s(X),Y), " << head_pred(q) << "(X), "
               << sym_pred(a) << "(X).\n";
        }
    }
    return parse_program(os.str());
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

// key: value...  (comments with %, blank lines skipped)
std::vector<std::pair<std::string, std::vector<std::string>>> parse_sections(
    std::string_view text) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto comment = line.find('%');
        if (comment != std::string::npos) line.erase(comment);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw SyntaxError(lineno, 1, "expected 'key: values' line");
        std::string key = line.substr(0, colon);
        key.erase(key.find_last_not_of(" \t") + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        out.emplace_back(key, split_words(line.substr(colon + 1)));
    }
    return out;
}

}  // namespace

TilingSystem parse_tiling_spec(std::string_view text) {
    TilingSystem t;
    for (const auto& [key, words] : parse_sections(text)) {
        if (key == "tiles") {
            t.tiles.insert(t.tiles.end(), words.begin(), words.end());
        } else if (key == "start") {
            if (words.size() != 1) throw SyntaxError(0, 0, "start: expects one tile");
            t.start_tile = words[0];
        } else if (key == "hi" || key == "vi") {
            if (words.size() != 2) throw SyntaxError(0, 0, key + ": expects a tile pair");
            (key == "hi" ? t.hi : t.vi).insert({words[0], words[1]});
        } else {
            throw SyntaxError(0, 0, "unknown section '" + key + "'");
        }
    }
    if (t.tiles.empty()) throw SyntaxError(0, 0, "no tiles declared");
    if (t.start_tile.empty()) throw SyntaxError(0, 0, "no start tile declared");
    auto known = [&](const std::string& tile) {
        return std::find(t.tiles.begin(), t.tiles.end(), tile) != t.tiles.end();
    };
    if (!known(t.start_tile)) throw SyntaxError(0, 0, "start tile not declared");
    for (const auto& [a, b] : t.hi)
        if (!known(a) || !known(b)) throw SyntaxError(0, 0, "hi pair uses unknown tile");
    for (const auto& [a, b] : t.vi)
        if (!known(a) || !known(b)) throw SyntaxError(0, 0, "vi pair uses unknown tile");
    return t;
}

TuringMachine parse_tm_spec(std::string_view text) {
    TuringMachine m;
    for (const auto& [key, words] : parse_sections(text)) {
        if (key == "states") {
            m.states.insert(m.states.end(), words.begin(), words.end());
        } else if (key == "start" || key == "accept" || key == "reject") {
            if (words.size() != 1) throw SyntaxError(0, 0, key + ": expects one state");
            (key == "start" ? m.start : key == "accept" ? m.accept : m.reject) = words[0];
        } else if (key == "delta") {
            if (words.size() != 5 || words[1].size() != 1 || words[3].size() != 1 ||
                words[4].size() != 1)
                throw SyntaxError(0, 0, "delta: expects 'from read to write move'");
            char read = words[1][0], write = words[3][0], move = words[4][0];
            if ((read != '0' && read != '1' && read != 'B') ||
                (write != '0' && write != '1' && write != 'B') ||
                (move != 'L' && move != 'R'))
                throw SyntaxError(0, 0, "delta: bad symbol or move");
            m.delta[{words[0], read}] = {words[2], write, move};
        } else {
            throw SyntaxError(0, 0, "unknown section '" + key + "'");
        }
    }
    auto known = [&](const std::string& q) {
        return std::find(m.states.begin(), m.states.end(), q) != m.states.end();
    };
    if (m.states.empty()) throw SyntaxError(0, 0, "no states declared");
    if (!known(m.start) || !known(m.accept) || !known(m.reject))
        throw SyntaxError(0, 0, "start/accept/reject must be declared states");
    if (m.accept == m.reject) throw SyntaxError(0, 0, "accept and reject must differ");
    for (const std::string& q : m.states) {
        if (q == m.accept || q == m.reject) continue;
        for (char a : {'0', '1', 'B'})
            if (!m.delta.count({q, a}))
                throw SyntaxError(0, 0, "delta not total: missing (" + q + ", " + a + ")");
    }
    for (const auto& [key, value] : m.delta) {
        if (!known(key.first) || !known(std::get<0>(value)))
            throw SyntaxError(0, 0, "delta uses unknown state");
        if (key.first == m.accept || key.first == m.reject)
            throw SyntaxError(0, 0, "delta defined on a final state");
    }
    return m;
}

}  // namespace aspen
