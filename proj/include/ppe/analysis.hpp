#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ppe/game_tree.hpp"
#include "ppe/ppe_general.hpp"
#include "ppe/spe.hpp"

namespace ppe {

// True iff no other outcome gives every player a strictly greater payoff.
inline bool is_pareto_optimal(const GameTree& tree, int outcome_entry) {
    if (!tree.is_outcome(outcome_entry))
        throw std::invalid_argument("is_pareto_optimal: not an outcome");
    for (int oix = 0; oix < tree.outcome_count(); ++oix) {
        int other = tree.outcome_entry(oix);
        if (other == outcome_entry) continue;
        bool improves_all = true;
        for (int p = 0; p < tree.player_count(); ++p)
            improves_all &= tree.payoff(other, p) > tree.payoff(outcome_entry, p);
        if (improves_all) return false;
    }
    return true;
}

struct ComparisonReport {
    int spe_outcome = -1;
    std::vector<int> spe_payoffs;
    int ppe_outcome = -1;
    std::vector<int> ppe_payoffs;
    bool equal = false;
    bool ppe_pareto_improves_spe = false;
};

inline ComparisonReport compare(const GameTree& tree) {
    ComparisonReport r;
    SpeResult spe = solve_spe(tree);
    GeneralSolveResult ppe = solve_ppe_general(tree);
    r.spe_outcome = spe.outcome;
    r.spe_payoffs = tree.payoffs(spe.outcome);
    r.ppe_outcome = ppe.outcome;
    r.ppe_payoffs = tree.payoffs(ppe.outcome);
    r.equal = spe.outcome == ppe.outcome;
    if (!r.equal) {
        r.ppe_pareto_improves_spe = true;
        for (int p = 0; p < tree.player_count(); ++p)
            r.ppe_pareto_improves_spe &= r.ppe_payoffs[p] > r.spe_payoffs[p];
    }
    return r;
}

// Two-level three-outcome game: node 0 (player 0) chooses between outcome 1
// with payoffs (a,d) and node 2 (player 1), which chooses between outcome 3
// (b,e) and outcome 4 (c,f). Payoffs are permutations of {0,1,2} per player;
// swapping (b,e) with (c,f) does not change the game, leaving 18 distinct
// games.
struct BipedGame {
    int a, b, c, d, e, f;
    std::string case_label; // "0", "1=", "1!=", "2"
};

struct BipedRow {
    BipedGame game;
    ComparisonReport report;
};

inline GameTree biped_tree(const BipedGame& g) {
    return GameTree(RawNode::node(
        0, 0,
        {RawNode::outcome(1, {g.a, g.d}),
         RawNode::node(2, 1, {RawNode::outcome(3, {g.b, g.e}), RawNode::outcome(4, {g.c, g.f})})}));
}

// All 18 biped games with their case labels and solved comparisons, in order
// of the cases: a=0, then a=1 (split on Mary's preference at node 2), then
// a=2. Representatives are canonicalized under the (b,e)/(c,f) swap: e < f for
// the a=0 and a=2 families, b < c for the a=1 family.
inline std::vector<BipedRow> enumerate_biped() {
    std::vector<BipedRow> rows;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto emit = [&](int a, int b, int c, int d, int e, int f, const char* label) {
        BipedGame g{a, b, c, d, e, f, label};
        rows.push_back(BipedRow{g, compare(biped_tree(g))});
    };
    for (auto& m : perms) { // case 0: a = 0, both (b,c) orders, e < f
        int d = m[0], e = m[1], f = m[2];
        if (e > f) continue;
        emit(0, 1, 2, d, e, f, "0");
        emit(0, 2, 1, d, e, f, "0");
    }
    for (auto& m : perms) { // case 1=: a = 1, b = 0, c = 2, e < f
        int d = m[0], e = m[1], f = m[2];
        if (e < f) emit(1, 0, 2, d, e, f, "1=");
    }
    for (auto& m : perms) { // case 1!=: a = 1, b = 0, c = 2, e > f
        int d = m[0], e = m[1], f = m[2];
        if (e > f) emit(1, 0, 2, d, e, f, "1!=");
    }
    for (auto& m : perms) { // case 2: a = 2, both (b,c) orders, e < f
        int d = m[0], e = m[1], f = m[2];
        if (e > f) continue;
        emit(2, 0, 1, d, e, f, "2");
        emit(2, 1, 0, d, e, f, "2");
    }
    return rows;
}

// Take-or-Leave shape: along a spine of decision nodes, each node offers one
// immediate outcome and one deeper node, except the deepest node which offers
// only outcomes (one or two); consecutive spine owners differ.
inline bool is_invertible(const GameTree& tree) {
    int node = tree.root();
    if (tree.is_outcome(node)) return true; // degenerate single-outcome spine
    int prev_owner = -1;
    for (;;) {
        if (prev_owner == tree.owner(node)) return false;
        prev_owner = tree.owner(node);
        const std::vector<int>& kids = tree.children(node);
        int next = -1;
        int outcomes = 0;
        for (int c : kids) {
            if (tree.is_outcome(c)) {
                ++outcomes;
            } else {
                if (next >= 0) return false; // two deeper nodes
                next = c;
            }
        }
        if (next < 0) return outcomes >= 1 && outcomes <= 2; // deepest node
        if (outcomes != 1 || kids.size() != 2) return false;
        node = next;
    }
}

// Fast path for invertible trees. Walking down the spine, the current player
// compares the present outcome against the surviving future ones: keep it if
// it beats them all, otherwise preempt the worse futures with the Take move
// and Leave. Agrees with the general construction.
inline int solve_invertible(const GameTree& tree) {
    if (!is_invertible(tree))
        throw std::invalid_argument("solve_invertible: tree is not invertible");
    int node = tree.root();
    if (tree.is_outcome(node)) return node;

    OutcomeSet survivors = tree.all_outcomes();
    for (;;) {
        int player = tree.owner(node);
        int next = -1;
        int present = -1;
        for (int c : tree.children(node)) {
            if (tree.is_outcome(c))
                present = c; // unique outcome child whenever a deeper node exists
            else
                next = c;
        }
        if (next < 0) { // deepest node: take the best surviving outcome
            int best = best_outcome_in(tree, survivors & tree.outcome_descendants(node), player);
            return tree.outcome_entry(best);
        }
        OutcomeSet future = survivors & tree.outcome_descendants(next);
        if (future.empty()) return present; // the whole future was preempted earlier
        if (survivors.contains(tree.outcome_index(present))) {
            int now = tree.payoff(present, player);
            if (now > tree.payoff_of(best_outcome_in(tree, future, player), player))
                return present; // the Take move preempts the whole future
            future.for_each([&](int oix) { // preempt worse futures, then Leave
                if (tree.payoff_of(oix, player) < now) survivors.erase(oix);
            });
            survivors.erase(tree.outcome_index(present));
        }
        node = next;
    }
}

} // namespace ppe
