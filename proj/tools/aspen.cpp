#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "aspen/consistency.hpp"
#include "aspen/errors.hpp"
#include "aspen/forbidden.hpp"
#include "aspen/ground_nf.hpp"
#include "aspen/grounding.hpp"
#include "aspen/parser.hpp"
#include "aspen/printer.hpp"
#include "aspen/reductions.hpp"
#include "aspen/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // inconsistent / no answer set, decisively
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Report {
    std::string command;
    bool as_json = false;
    json doc = json::object();
    std::vector<std::string> lines;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void field(const std::string& key, const json& value) {
        doc[key] = value;
        if (value.is_string())
            lines.push_back(key + ": " + value.get<std::string>());
        else
            lines.push_back(key + ": " + value.dump());
    }

    void block(const std::string& key, const std::string& text) {
        doc[key] = text;
        lines.push_back(key + ":");
        lines.push_back(text);
    }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        doc["command"] = command;
        doc["wall_ms"] = ms;
        if (as_json) {
            std::cout << doc.dump() << "\n";
        } else {
            for (const std::string& line : lines) std::cout << line << "\n";
            std::cout << "wall_ms: " << ms << "\n";
        }
    }
};

json budget_json(const aspen::Budget& b) {
    return json{{"max_iterations", b.max_iterations},
                {"max_atoms", b.max_atoms},
                {"max_ground_rules", b.max_ground_rules},
                {"solver_nodes", b.solver_nodes},
                {"forbidden_depth", b.forbidden_depth},
                {"forbidden_calls", b.forbidden_calls}};
}

json atoms_json(const aspen::Interpretation& i) {
    json out = json::array();
    for (const aspen::Atom& a : i.sorted()) out.push_back(aspen::to_string(a));
    return out;
}

void add_budget_flags(CLI::App* cmd, aspen::Budget& budget) {
    cmd->add_option("--max-iter", budget.max_iterations, "Level iteration cap");
    cmd->add_option("--max-atoms", budget.max_atoms, "Derived atom cap");
    cmd->add_option("--max-rules", budget.max_ground_rules, "Ground rule cap");
    cmd->add_option("--solver-nodes", budget.solver_nodes, "Search node cap per solve");
    cmd->add_option("--forbidden-depth", budget.forbidden_depth, "Forbidden-check recursion cap");
    cmd->add_option("--forbidden-calls", budget.forbidden_calls, "Forbidden-check call cap");
}

int run(int argc, char** argv) {
    CLI::App app{"Grounder, solver, and consistency analyzer for normal programs "
                 "with function symbols"};
    app.require_subcommand(1);

    std::string file, atom_text, gen_kind, spec_file, tm_input;
    int depth = 3;
    std::size_t limit = 0;
    bool as_json = false, not_forbidden = false, prune = false, trace = false;
    aspen::Budget budget;

    auto* parse_cmd = app.add_subcommand("parse", "Echo the canonical form of a program");
    parse_cmd->add_option("file", file)->required();
    parse_cmd->add_flag("--json", as_json);

    auto* ground_cmd = app.add_subcommand("ground", "Ground a program");
    ground_cmd->add_option("file", file)->required();
    ground_cmd->add_option("--depth", depth, "Herbrand depth for naive grounding");
    ground_cmd->add_flag("--not-forbidden", not_forbidden,
                         "Level-saturated grounding that blocks forbidden heads");
    ground_cmd->add_flag("--json", as_json);
    add_budget_flags(ground_cmd, budget);

    auto* solve_cmd = app.add_subcommand("solve", "Enumerate answer sets of the grounding");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--depth", depth, "Herbrand depth");
    solve_cmd->add_option("--limit", limit, "Stop after this many answer sets");
    solve_cmd->add_flag("--json", as_json);
    add_budget_flags(solve_cmd, budget);

    auto* check_cmd = app.add_subcommand("check", "Semi-decide consistency");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_flag("--prune-forbidden", prune, "Skip atoms certified forbidden");
    check_cmd->add_flag("--json", as_json);
    add_budget_flags(check_cmd, budget);

    auto* forbidden_cmd = app.add_subcommand("forbidden", "Run the forbidden-atom check");
    forbidden_cmd->add_option("file", file)->required();
    forbidden_cmd->add_option("--atom", atom_text, "Ground atom to test")->required();
    forbidden_cmd->add_flag("--trace", trace, "Print one line per algorithm step");
    forbidden_cmd->add_flag("--json", as_json);
    add_budget_flags(forbidden_cmd, budget);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a program from a spec file");
    gen_cmd->add_option("kind", gen_kind, "tiling | tm")->required();
    gen_cmd->add_option("spec", spec_file)->required();
    gen_cmd->add_option("--input", tm_input, "Fixed binary input word (tm only)");
    bool have_input = false;
    gen_cmd->callback([&] { have_input = gen_cmd->count("--input") > 0; });

    CLI11_PARSE(app, argc, argv);

    Report report;
    report.as_json = as_json;

    if (parse_cmd->parsed()) {
        report.command = "parse";
        aspen::Program p = aspen::parse_program(read_file(file));
        report.field("rules", p.rules.size());
        report.block("program", aspen::to_string(p));
        report.finish();
        return kExitOk;
    }

    if (ground_cmd->parsed()) {
        report.command = "ground";
        aspen::Program p = aspen::parse_program(read_file(file));
        if (not_forbidden) {
            aspen::ForbiddenOracle oracle = aspen::make_forbidden_oracle(p, budget);
            aspen::GroundingResult result = aspen::ground_not_forbidden(p, oracle, budget);
            std::ostringstream os;
            for (const aspen::GroundRule& r : result.rules) os << aspen::to_string(r) << "\n";
            report.field("outcome", result.complete ? "complete" : "budget-exhausted");
            report.field("levels", result.levels);
            report.field("rules", result.rules.size());
            report.block("grounding", os.str());
            report.finish();
            return result.complete ? kExitOk : kExitBudget;
        }
        try {
            aspen::GroundingLimits gl{budget.max_atoms, budget.max_ground_rules};
            auto terms = aspen::herbrand_terms(p, depth, gl);
            auto rules = aspen::ground_with_terms(p, terms, gl);
            std::ostringstream os;
            for (const aspen::GroundRule& r : rules) os << aspen::to_string(r) << "\n";
            report.field("outcome", "complete");
            report.field("depth", depth);
            report.field("terms", terms.size());
            report.field("rules", rules.size());
            report.block("grounding", os.str());
            report.finish();
            return kExitOk;
        } catch (const aspen::ResourceExceeded& e) {
            report.field("outcome", "budget-exhausted");
            report.field("reason", e.what());
            report.finish();
            return kExitBudget;
        }
    }

    if (solve_cmd->parsed()) {
        report.command = "solve";
        aspen::Program p = aspen::parse_program(read_file(file));
        try {
            aspen::GroundingLimits gl{budget.max_atoms, budget.max_ground_rules};
            auto terms = aspen::herbrand_terms(p, depth, gl);
            auto rules = aspen::ground_with_terms(p, terms, gl);
            aspen::SolveLimits sl{budget.solver_nodes};
            std::optional<std::size_t> lim;
            if (limit > 0) lim = limit;
            auto models = aspen::enumerate_answer_sets(rules, lim, sl);
            report.field("outcome", models.empty() ? "no-answer-set" : "answer-sets");
            report.field("depth", depth);
            report.field("count", models.size());
            json sets = json::array();
            std::vector<std::string> printable;
            for (const aspen::Interpretation& m : models) {
                sets.push_back(atoms_json(m));
                printable.push_back(aspen::to_string(m));
            }
            report.doc["answer_sets"] = sets;
            for (std::size_t k = 0; k < printable.size(); ++k)
                report.lines.push_back("answer_set " + std::to_string(k + 1) + ": " +
                                       printable[k]);
            report.finish();
            return models.empty() ? kExitNegative : kExitOk;
        } catch (const aspen::ResourceExceeded& e) {
            report.field("outcome", "budget-exhausted");
            report.field("reason", e.what());
            report.finish();
            return kExitBudget;
        }
    }

    if (check_cmd->parsed()) {
        report.command = "check";
        aspen::Program p = aspen::parse_program(read_file(file));
        aspen::ForbiddenOracle oracle;
        if (prune) oracle = aspen::make_forbidden_oracle(p, budget);
        aspen::Outcome outcome = aspen::is_consistent(p, budget, oracle);
        report.field("outcome", aspen::to_string(outcome.kind));
        report.field("iterations", outcome.iterations);
        report.field("pruning", prune ? "forbidden" : "off");
        report.doc["budget"] = budget_json(budget);
        if (outcome.kind == aspen::Outcome::Kind::Consistent) {
            report.doc["witness"] = atoms_json(outcome.witness);
            report.lines.push_back("witness: " + aspen::to_string(outcome.witness));
        } else {
            report.field("level_atoms", outcome.witness.size());
        }
        report.finish();
        switch (outcome.kind) {
            case aspen::Outcome::Kind::Consistent: return kExitOk;
            case aspen::Outcome::Kind::Inconsistent: return kExitNegative;
            case aspen::Outcome::Kind::BudgetExhausted: return kExitBudget;
        }
    }

    if (forbidden_cmd->parsed()) {
        report.command = "forbidden";
        aspen::Program p = aspen::parse_program(read_file(file));
        aspen::Atom atom = aspen::parse_ground_atom(atom_text, p);
        std::vector<std::string> trace_lines;
        aspen::TraceSink sink;
        if (trace)
            sink = [&](const std::string& line) { trace_lines.push_back(line); };
        aspen::SignedPair query;
        query.pos.insert(atom);
        bool verdict = aspen::is_forbidden(p, query, budget, sink);
        report.field("atom", aspen::to_string(atom));
        report.field("forbidden", verdict);
        if (trace) {
            json jt = json::array();
            for (const std::string& line : trace_lines) {
                jt.push_back(line);
                report.lines.push_back(line);
            }
            report.doc["trace"] = jt;
        }
        report.finish();
        return kExitOk;
    }

    if (gen_cmd->parsed()) {
        report.command = "gen";
        std::string text = read_file(spec_file);
        aspen::Program p;
        if (gen_kind == "tiling") {
            p = aspen::tiling_to_program(aspen::parse_tiling_spec(text));
        } else if (gen_kind == "tm") {
            std::optional<std::string> word;
            if (have_input) word = tm_input;
            p = aspen::tm_to_program(aspen::parse_tm_spec(text), word);
        } else {
            std::cerr << "unknown generator '" << gen_kind << "'\n";
            return kExitUsage;
        }
        std::cout << aspen::to_string(p);
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aspen::SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const aspen::ArityMismatch& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const aspen::UnsafeRule& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
