// Command-line front end: solving, comparison, logic verification, biped
// enumeration, random generation and DOT export for extensive-form games in
// the EFG-lite format.
//
// Exit codes: 0 success, 1 input error, 2 resource-bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ppe/analysis.hpp"
#include "ppe/efg.hpp"
#include "ppe/logic.hpp"
#include "ppe/ppe_general.hpp"
#include "ppe/ppe_quick.hpp"
#include "ppe/random_game.hpp"
#include "ppe/report.hpp"
#include "ppe/spe.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

int run_solve(const std::string& file, const std::string& method, bool trace,
              int max_logic_vars) {
    ppe::GameTree tree = ppe::parse_game(read_input(file));
    if (method == "spe") {
        ppe::SpeResult r = ppe::solve_spe(tree);
        std::cout << ppe::render_solve_report(tree, method, r.path, r.outcome);
    } else if (method == "ppe-general") {
        ppe::GeneralSolveResult r = ppe::solve_ppe_general(tree);
        std::cout << ppe::render_solve_report(tree, method, r.path, r.outcome, &r.trace,
                                              trace);
    } else if (method == "ppe-quick") {
        ppe::QuickSolveResult r = ppe::solve_ppe_quick(tree);
        std::cout << ppe::render_solve_report(tree, method, r.path, r.outcome);
    } else { // ppe-logic
        ppe::LogicSolveResult r = ppe::solve_ppe_logic(tree, max_logic_vars);
        std::cout << ppe::render_solve_report(tree, method, r.path, r.outcome);
    }
    return 0;
}

int run_compare(const std::string& file) {
    ppe::GameTree tree = ppe::parse_game(read_input(file));
    std::cout << ppe::render_compare_report(tree, ppe::compare(tree));
    return 0;
}

int run_verify(const std::string& file, int max_logic_vars) {
    ppe::GameTree tree = ppe::parse_game(read_input(file));
    ppe::LogicSolveResult logic = ppe::solve_ppe_logic(tree, max_logic_vars);
    int general = ppe::solve_ppe_general(tree).outcome;
    int quick = ppe::solve_ppe_quick(tree).outcome;
    std::cout << ppe::render_verify_report(tree, logic, general, quick);
    return 0;
}

int run_dot(const std::string& file) {
    ppe::GameTree tree = ppe::parse_game(read_input(file));
    std::cout << ppe::render_dot(tree, ppe::solve_ppe_general(tree));
    return 0;
}

int run_random(std::uint64_t seed, int players, int depth, int branching, int count) {
    for (int k = 0; k < count; ++k) {
        ppe::GameTree t = ppe::random_game(seed + static_cast<std::uint64_t>(k), players,
                                           depth, branching);
        if (k) std::cout << "\n";
        std::cout << ppe::serialize_game(t) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect prediction equilibrium solver for extensive-form games"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string method = "ppe-general";
    bool trace = false;
    int max_logic_vars = 24;
    std::uint64_t seed = 0;
    int players = 2;
    int depth = 4;
    int branching = 2;
    int count = 1;

    CLI::App* solve = app.add_subcommand("solve", "solve a game file (or - for stdin)");
    solve->add_option("file", file, "game file in EFG-lite format");
    solve->add_option("--method", method, "spe | ppe-general | ppe-quick | ppe-logic")
        ->check(CLI::IsMember({"spe", "ppe-general", "ppe-quick", "ppe-logic"}));
    solve->add_flag("--trace", trace, "include the elimination trace (ppe-general)");
    solve->add_option("--max-logic-vars", max_logic_vars,
                      "enumeration bound for ppe-logic (default 24)");

    CLI::App* cmp = app.add_subcommand("compare", "solve with SPE and PPE and compare");
    cmp->add_option("file", file, "game file in EFG-lite format");

    CLI::App* verify = app.add_subcommand(
        "verify", "print the equation system, powerset component and agreement verdict");
    verify->add_option("file", file, "game file in EFG-lite format");
    verify->add_option("--max-logic-vars", max_logic_vars,
                       "enumeration bound (default 24)");

    CLI::App* biped = app.add_subcommand("biped", "enumerate all 18 biped games");

    CLI::App* dot = app.add_subcommand("dot", "export the solved game as DOT");
    dot->add_option("file", file, "game file in EFG-lite format");

    CLI::App* random = app.add_subcommand("random", "generate random games");
    random->add_option("--seed", seed, "generator seed (game k uses seed+k)");
    random->add_option("--players", players, "number of players (>= 2)");
    random->add_option("--depth", depth, "maximum depth (>= 1)");
    random->add_option("--branching", branching, "maximum branching (>= 1)");
    random->add_option("--count", count, "number of games to emit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(file, method, trace, max_logic_vars);
        if (*cmp) return run_compare(file);
        if (*verify) return run_verify(file, max_logic_vars);
        if (*biped) {
            std::cout << ppe::render_biped_table(ppe::enumerate_biped());
            return 0;
        }
        if (*dot) return run_dot(file);
        if (*random) {
            if (count < 1) throw std::invalid_argument("count must be >= 1");
            return run_random(seed, players, depth, branching, count);
        }
    } catch (const ppe::LogicBoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
