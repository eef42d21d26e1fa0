#include "doctest.h"

#include <chrono>

#include "ppe/analysis.hpp"
#include "ppe/ppe_general.hpp"
#include "ppe/ppe_quick.hpp"
#include "ppe/random_game.hpp"
#include "support.hpp"

using namespace ppe;
using support::ids_of_path;
using support::ids_of_set;

TEST_CASE("quick algorithm on the fixtures") {
    GameTree assurance = fixtures::assurance();
    CHECK(assurance.id(solve_ppe_quick(assurance).outcome) == 4);

    GameTree single = fixtures::single_outcome();
    CHECK(solve_ppe_quick(single).outcome == single.root());

    GameTree gamma = fixtures::gamma();
    QuickSolveResult r = solve_ppe_quick(gamma);
    CHECK(ids_of_path(gamma, r.path) == std::vector<int>{0, 2, 6, 11});
    // at the root: o8 falls below the sibling cap M = 1
    CHECK(ids_of_set(gamma, r.steps[0].surviving) == std::vector<int>{7, 9, 10, 11});
}

TEST_CASE("survivor maxima ignore outcomes pruned at earlier nodes") {
    // At n2 of the gamma fixture, player 1's highest original payoff sits at
    // o8, which the root visit already removed; the descent must follow the
    // surviving maximum into n6 instead of n5.
    GameTree t = fixtures::gamma();
    QuickSolveResult r = solve_ppe_quick(t);
    REQUIRE(r.path.size() >= 3);
    CHECK(t.id(r.path[2]) == 6);
    CHECK(ids_of_set(t, r.steps[1].surviving) == std::vector<int>{9, 11});
}

TEST_CASE("intermediate survivor sets equal the I-sets of the general algorithm") {
    auto check_sets = [](const GameTree& t) {
        GeneralSolveResult general = solve_ppe_general(t);
        QuickSolveResult quick = solve_ppe_quick(t);
        REQUIRE(general.trace.steps.size() == quick.steps.size());
        for (std::size_t i = 0; i < quick.steps.size(); ++i) {
            CHECK(quick.steps[i].at == general.trace.steps[i].at);
            CHECK(quick.steps[i].surviving == general.trace.steps[i].surviving);
        }
    };
    check_sets(fixtures::assurance());
    check_sets(fixtures::gamma());
    check_sets(fixtures::take_or_leave());
    for (int seed = 1; seed <= 150; ++seed)
        check_sets(random_game(seed, 2 + seed % 2, 1 + seed % 5, 1 + seed % 3));
}

TEST_CASE("quick and general agree on a random corpus") {
    for (int seed = 1; seed <= 400; ++seed) {
        GameTree t = random_game(seed, 2 + seed % 2, 1 + seed % 5, 1 + seed % 3);
        CHECK(solve_ppe_quick(t).outcome == solve_ppe_general(t).outcome);
    }
}

TEST_CASE("quick and general agree on deep and wide trees") {
    for (int seed = 1; seed <= 25; ++seed) {
        GameTree t = random_game(seed * 31, 2 + seed % 3, 6 + seed % 2, 4);
        GeneralSolveResult general = solve_ppe_general(t);
        CHECK(solve_ppe_quick(t).outcome == general.outcome);
        CHECK(is_pareto_optimal(t, general.outcome));
    }
}

TEST_CASE("quick solve scales roughly with nodes times depth") {
    auto time_solve = [](const GameTree& t) {
        auto start = std::chrono::steady_clock::now();
        solve_ppe_quick(t);
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    };
    GameTree small = random_game(7, 2, 7, 3);
    GameTree large = random_game(7, 2, 10, 3);
    double t_small = 0;
    double t_large = 0;
    for (int rep = 0; rep < 3; ++rep) {
        t_small += time_solve(small);
        t_large += time_solve(large);
    }
    double work_ratio = (static_cast<double>(large.size()) * large.depth()) /
                        (static_cast<double>(small.size()) * small.depth());
    // coarse threshold: allow a wide constant factor over the linear model,
    // enough to absorb timer noise but far below quadratic growth
    CHECK(t_large < 25.0 * work_ratio * (t_small + 1e-4));
}
