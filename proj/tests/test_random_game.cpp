#include "doctest.h"

#include <set>

#include "ppe/efg.hpp"
#include "ppe/random_game.hpp"
#include "support.hpp"

using namespace ppe;

TEST_CASE("random_game shape bounds") {
    GameTree t = random_game(1, 2, 1, 2);
    CHECK(!t.is_outcome(t.root()));
    CHECK(t.children(t.root()).size() <= 2);
    for (int c : t.children(t.root())) CHECK(t.is_outcome(c));
    CHECK(t.depth() == 1);
}

TEST_CASE("random_game is deterministic in the seed") {
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        GameTree a = random_game(seed, 2, 4, 3);
        GameTree b = random_game(seed, 2, 4, 3);
        CHECK(serialize_game(a) == serialize_game(b));
    }
    CHECK(serialize_game(random_game(1, 2, 4, 3)) != serialize_game(random_game(2, 2, 4, 3)));
}

TEST_CASE("random_game payoffs are permutations of 0..n-1") {
    GameTree t = random_game(42, 3, 4, 3);
    CHECK(t.player_count() == 3);
    for (int p = 0; p < t.player_count(); ++p) {
        std::set<int> seen;
        for (int oix = 0; oix < t.outcome_count(); ++oix) seen.insert(t.payoff_of(oix, p));
        CHECK(*seen.begin() == 0);
        CHECK(*seen.rbegin() == t.outcome_count() - 1);
        CHECK(static_cast<int>(seen.size()) == t.outcome_count());
    }
}

TEST_CASE("1000 random games validate and round-trip") {
    for (int seed = 1; seed <= 1000; ++seed) {
        // construction validates; a failure throws and fails the test
        GameTree t = random_game(seed, 2 + seed % 2, 1 + seed % 5, 1 + seed % 3);
        CHECK(t.outcome_count() >= 1);
        GameTree again = parse_game(serialize_game(t));
        CHECK(t.structurally_equal(again));
    }
}

TEST_CASE("random_game rejects bad bounds") {
    CHECK_THROWS_AS(random_game(1, 1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_game(1, 2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_game(1, 2, 3, 0), std::invalid_argument);
}
