#include "doctest.h"

#include <set>
#include <string>

#include "ppe/efg.hpp"
#include "ppe/game_tree.hpp"
#include "ppe/ppe_general.hpp"
#include "ppe/random_game.hpp"
#include "support.hpp"

using namespace ppe;

TEST_CASE("parse the assurance game") {
    GameTree t = fixtures::assurance();
    CHECK(t.player_count() == 2);
    CHECK(t.outcome_count() == 3);
    CHECK(t.size() == 5);

    int root = t.root();
    CHECK(t.id(root) == 0);
    CHECK(t.owner(root) == 0);
    REQUIRE(t.children(root).size() == 2);

    int o1 = t.index_of(1);
    CHECK(t.is_outcome(o1));
    CHECK(t.payoffs(o1) == std::vector<int>{0, 0});
    int o3 = t.index_of(3);
    CHECK(t.payoffs(o3) == std::vector<int>{-1, 2});
    int o4 = t.index_of(4);
    CHECK(t.payoffs(o4) == std::vector<int>{1, 1});
    CHECK(t.owner(t.index_of(2)) == 1);
}

TEST_CASE("parse a single-outcome game") {
    GameTree t = fixtures::single_outcome();
    CHECK(t.is_outcome(t.root()));
    CHECK(t.player_count() == 2);
    CHECK(t.payoffs(t.root()) == std::vector<int>{7, 3});
    CHECK(serialize_game(t) == "(o1 7 3)");
}

TEST_CASE("parse rejects strict-preference violations") {
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0 0) (o2 0 1))"), ValidationError);
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0 5) (o2 1 5))"), ValidationError);
}

TEST_CASE("parse error cases") {
    // syntax
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0 0)"), ParseError);
    CHECK_THROWS_AS(parse_game("(x0 P0 (o1 0 0))"), ParseError);
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0 0) (o2 1 1)) trailing"), ParseError);
    CHECK_THROWS_AS(parse_game(""), ParseError);
    // empty node
    CHECK_THROWS_AS(parse_game("(n0 P0)"), ParseError);
    // duplicate id
    CHECK_THROWS_AS(parse_game("(n0 P0 (o0 0 0) (o2 1 1))"), ValidationError);
    // payoff arity mismatch
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0 0) (o2 1 1 1))"), ValidationError);
    // fewer than two players
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0) (o2 1))"), ValidationError);
    // player index out of range
    CHECK_THROWS_AS(parse_game("(n0 P2 (o1 0 0) (o2 1 1))"), ValidationError);
    // negative id
    CHECK_THROWS_AS(parse_game("(n0 P0 (o1 0 0) (n-2 P1 (o3 1 1) (o4 2 2)))"),
                    ParseError);
}

TEST_CASE("parse errors report positions") {
    try {
        parse_game("(n0 P0\n  (o1 0 0)\n  (q2 1 1))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("3:") != std::string::npos);
    }
}

TEST_CASE("round-trip on fixtures") {
    for (const char* text : {fixtures::kAssurance, fixtures::kGamma,
                             fixtures::kTakeOrLeave, fixtures::kSingleOutcome}) {
        GameTree t = parse_game(text);
        GameTree again = parse_game(serialize_game(t));
        CHECK(t.structurally_equal(again));
        CHECK(serialize_game(again) == serialize_game(t));
    }
}

TEST_CASE("round-trip preserves the solution of the gamma fixture") {
    GameTree t = fixtures::gamma();
    GameTree again = parse_game(serialize_game(t));
    CHECK(again.id(solve_ppe_general(again).outcome) ==
          t.id(solve_ppe_general(t).outcome));
}

TEST_CASE("serializer keeps stored child order") {
    GameTree t = fixtures::assurance();
    CHECK(serialize_game(t) == "(n0 P0 (o1 0 0) (n2 P1 (o3 -1 2) (o4 1 1)))");
}

TEST_CASE("whitespace-insensitive parsing") {
    GameTree t = parse_game("  ( n0   P0\n\t(o1 0 0)\n ( n2 P1 (o3 -1 2) (o4 1 1) ) ) ");
    CHECK(t.structurally_equal(fixtures::assurance()));
}

TEST_CASE("descendants on the assurance game") {
    GameTree t = fixtures::assurance();
    CHECK(descendant_outcome_ids(t, 2) == std::vector<int>{3, 4});
    CHECK(descendant_outcome_ids(t, 0) == std::vector<int>{1, 3, 4});
    // reflexive on outcomes
    CHECK(descendant_outcome_ids(t, 4) == std::vector<int>{4});
    CHECK_THROWS_AS(descendant_outcome_ids(t, 99), ValidationError);
}

TEST_CASE("mutated game texts never crash the parser") {
    Rng rng(4242);
    int parsed = 0;
    for (int round = 0; round < 400; ++round) {
        std::string text = serialize_game(random_game(round, 2, 1 + round % 3, 2));
        int edits = 1 + rng.below(4);
        for (int e = 0; e < edits; ++e) {
            int pos = rng.below(static_cast<int>(text.size()));
            switch (rng.below(3)) {
            case 0: text[pos] = static_cast<char>(32 + rng.below(95)); break;
            case 1: text.erase(pos, 1); break;
            default: text.insert(pos, 1, static_cast<char>(32 + rng.below(95)));
            }
            if (text.empty()) text = "(";
        }
        try {
            GameTree t = parse_game(text);
            ++parsed; // a mutation can still be a valid game
        } catch (const ParseError&) {
        } catch (const ValidationError&) {
        }
    }
    CHECK(parsed < 400); // most mutations must be rejected
}

TEST_CASE("descendants decompose over children") {
    GameTree t = fixtures::gamma();
    for (int v = 0; v < t.size(); ++v) {
        OutcomeSet expect(t.outcome_count());
        if (t.is_outcome(v)) {
            expect.insert(t.outcome_index(v));
        } else {
            for (int c : t.children(v)) expect |= t.outcome_descendants(c);
        }
        CHECK(t.outcome_descendants(v) == expect);
    }
}
