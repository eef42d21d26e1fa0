#pragma once

#include <cassert>
#include <unordered_map>
#include <vector>

#include "ppe/game_tree.hpp"

namespace ppe {

struct SpeResult {
    // Total strategy profile: every decision node maps to the chosen child,
    // including nodes the induced path never reaches.
    std::unordered_map<int, int> strategy;
    std::vector<int> path; // entry indices, root .. outcome
    int outcome = -1;      // entry index
};

namespace detail {

inline int spe_value(const GameTree& tree, int v, std::unordered_map<int, int>& strategy) {
    if (tree.is_outcome(v)) return v;
    int best_child = -1;
    int best_outcome = -1;
    for (int c : tree.children(v)) {
        int o = spe_value(tree, c, strategy);
        if (best_child < 0 ||
            tree.payoff(o, tree.owner(v)) > tree.payoff(best_outcome, tree.owner(v))) {
            best_child = c;
            best_outcome = o;
        } else {
            // strict preferences rule out ties
            assert(tree.payoff(o, tree.owner(v)) !=
                   tree.payoff(best_outcome, tree.owner(v)));
        }
    }
    strategy[v] = best_child;
    return best_outcome;
}

} // namespace detail

// Backward induction from `start` (default: the whole game). Under strict
// preferences the choice at every node is unique.
inline SpeResult solve_spe_from(const GameTree& tree, int start) {
    SpeResult r;
    r.outcome = detail::spe_value(tree, start, r.strategy);
    int v = start;
    r.path.push_back(v);
    while (!tree.is_outcome(v)) {
        v = r.strategy.at(v);
        r.path.push_back(v);
    }
    assert(v == r.outcome);
    return r;
}

inline SpeResult solve_spe(const GameTree& tree) { return solve_spe_from(tree, tree.root()); }

} // namespace ppe
