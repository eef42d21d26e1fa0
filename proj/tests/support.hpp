#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppe/efg.hpp"
#include "ppe/game_tree.hpp"
#include "ppe/random_game.hpp"

namespace fixtures {

// Trust game: player 0 chooses between a safe outcome and handing the move to
// player 1, whose tempting deviation hurts player 0.
inline constexpr const char* kAssurance =
    "(n0 P0 (o1 0 0) (n2 P1 (o3 -1 2) (o4 1 1)))";

// Two-level game with interlaced payoffs on both sides; the canonical
// stress-test for the elimination order.
inline constexpr const char* kGamma =
    "(n0 P0"
    " (n1 P1 (o3 1 4) (o4 -1 5))"
    " (n2 P1 (n5 P0 (o7 4 1) (o8 0 6)) (n6 P0 (o9 2 2) (o10 5 0) (o11 3 3))))";

// Five-round take-or-leave spine with strictly increasing pots.
inline constexpr const char* kTakeOrLeave =
    "(n0 P0 (o1 1 0)"
    " (n2 P1 (o3 0 2)"
    " (n4 P0 (o5 3 1)"
    " (n6 P1 (o7 2 4)"
    " (n8 P0 (o9 5 3))))))";

inline constexpr const char* kSingleOutcome = "(o1 7 3)";

inline ppe::GameTree assurance() { return ppe::parse_game(kAssurance); }
inline ppe::GameTree gamma() { return ppe::parse_game(kGamma); }
inline ppe::GameTree take_or_leave() { return ppe::parse_game(kTakeOrLeave); }
inline ppe::GameTree single_outcome() { return ppe::parse_game(kSingleOutcome); }

} // namespace fixtures

namespace support {

inline ppe::OutcomeSet set_of_ids(const ppe::GameTree& tree, const std::vector<int>& ids) {
    ppe::OutcomeSet s(tree.outcome_count());
    for (int id : ids) s.insert(tree.outcome_index(tree.index_of(id)));
    return s;
}

inline std::vector<int> ids_of_path(const ppe::GameTree& tree, const std::vector<int>& path) {
    std::vector<int> ids;
    for (int v : path) ids.push_back(tree.id(v));
    return ids;
}

inline std::vector<int> ids_of_set(const ppe::GameTree& tree, const ppe::OutcomeSet& set) {
    std::vector<int> ids;
    set.for_each([&](int oix) { ids.push_back(tree.id(tree.outcome_entry(oix))); });
    std::sort(ids.begin(), ids.end());
    return ids;
}

// Random take-or-leave shaped game: `rounds` decision nodes with alternating
// owners, each offering one immediate outcome, the deepest offering one or two.
inline ppe::GameTree random_invertible(std::uint64_t seed, int rounds) {
    ppe::Rng rng(seed);
    bool last_has_two = rng.coin();
    int leaves = rounds + (last_has_two ? 1 : 0);
    std::vector<std::vector<int>> perms(2);
    for (auto& perm : perms) {
        perm.resize(leaves);
        for (int i = 0; i < leaves; ++i) perm[i] = i;
        rng.shuffle(perm);
    }

    int first_owner = rng.below(2);
    int id = 0;
    int leaf = 0;
    auto take_leaf = [&]() {
        ppe::RawNode o = ppe::RawNode::outcome(id++, {perms[0][leaf], perms[1][leaf]});
        ++leaf;
        return o;
    };
    // build bottom-up
    ppe::RawNode node;
    for (int depth = rounds - 1; depth >= 0; --depth) {
        int owner = (first_owner + depth) % 2;
        ppe::RawNode fresh;
        if (depth == rounds - 1) {
            std::vector<ppe::RawNode> kids;
            kids.push_back(take_leaf());
            if (last_has_two) kids.push_back(take_leaf());
            fresh = ppe::RawNode::node(0, owner, std::move(kids));
        } else {
            std::vector<ppe::RawNode> kids;
            kids.push_back(take_leaf());
            kids.push_back(std::move(node));
            fresh = ppe::RawNode::node(0, owner, std::move(kids));
        }
        node = std::move(fresh);
    }

    // ids were assigned leaf-first; renumber in preorder so they read naturally
    int next_id = 0;
    struct Renumber {
        int* next;
        void operator()(ppe::RawNode& n) const {
            n.id = (*next)++;
            for (ppe::RawNode& c : n.children) (*this)(c);
        }
    } renumber{&next_id};
    renumber(node);
    return ppe::GameTree(node);
}

} // namespace support
