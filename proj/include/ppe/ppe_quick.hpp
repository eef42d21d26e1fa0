#pragma once

#include <cassert>
#include <vector>

#include "ppe/game_tree.hpp"

namespace ppe {

struct QuickStep {
    int at = -1;          // node that was visited
    OutcomeSet surviving; // survivor set right after processing it
};

struct QuickSolveResult {
    std::vector<int> path;
    int outcome = -1;
    std::vector<QuickStep> steps;
};

// Computes the equilibrium path without materializing the preemption
// structure. At each visited node: descend into the subtree s holding the
// current player's best surviving payoff; let M be the player's best surviving
// payoff in the sibling subtrees, drop those subtrees entirely and drop from s
// every outcome below M. Maxima are taken over surviving outcomes only, so
// subtrees emptied by earlier pruning never attract the descent. Works on a
// private survivor mask; the shared tree is never touched.
inline QuickSolveResult solve_ppe_quick(const GameTree& tree) {
    QuickSolveResult r;
    OutcomeSet survivors = tree.all_outcomes();
    int node = tree.root();
    r.path.push_back(node);
    while (!tree.is_outcome(node)) {
        int player = tree.owner(node);
        int best = best_outcome_in(tree, survivors, player);
        assert(best >= 0);
        int sub = -1;
        for (int c : tree.children(node)) {
            if (tree.outcome_descendants(c).contains(best)) {
                sub = c;
                break;
            }
        }
        assert(sub >= 0);

        OutcomeSet others = survivors - tree.outcome_descendants(sub);
        if (!others.empty()) {
            int cap = tree.payoff_of(best_outcome_in(tree, others, player), player);
            survivors &= tree.outcome_descendants(sub);
            OutcomeSet below(survivors.universe());
            survivors.for_each([&](int oix) {
                if (tree.payoff_of(oix, player) < cap) below.insert(oix);
            });
            survivors -= below;
        }
        r.steps.push_back(QuickStep{node, survivors});
        node = sub;
        r.path.push_back(node);
    }
    assert(survivors.count() == 1 && survivors.contains(tree.outcome_index(node)));
    r.outcome = node;
    return r;
}

} // namespace ppe
