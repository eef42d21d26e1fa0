#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "ppe/game_tree.hpp"

namespace ppe {

enum class Principle {
    preemption = 1,      // deviation breaks the causal bridge of the predicted outcome
    rational_choice = 2, // outcome falls out of the final subtree selection
};

// One discarded outcome together with its justification. For preemption the
// witness is the Newcombian state the player would deviate to (pure part
// first); for rational choice it is the chosen child.
struct Discard {
    int outcome = -1;
    Principle principle = Principle::preemption;
    std::vector<int> witness_state;
    int witness_move = -1;
    int substep = 0; // order k of the discarding class within the step
};

// Equivalence class of target-equivalent Newcombian states, represented by its
// pure part, its worst payoff for the current player and the targeted set.
// `state` is a representative state kept as a trace witness.
struct NewcombianClass {
    int pure = -1;
    int worst_payoff = 0;
    OutcomeSet targeted;
    std::vector<int> state;
};

struct StepRecord {
    int index = 2;       // step i; the root step is i = 2
    int at = -1;         // c_{i-1}
    int move = -1;       // c_i
    OutcomeSet surviving; // I_i
    std::vector<Discard> discards;
    std::vector<int> class_worst_payoffs; // wp of the best class of order 1..K
};

struct EliminationTrace {
    std::vector<StepRecord> steps;
    int final_outcome = -1;
};

struct GeneralSolveResult {
    std::vector<int> path; // c_1 .. c_d as entry indices
    int outcome = -1;
    EliminationTrace trace;
};

// Minimum of `player`'s payoffs over a nonempty targeted set.
inline int worst_payoff(const GameTree& tree, int player, const OutcomeSet& targeted) {
    int worst = worst_outcome_in(tree, targeted, player);
    if (worst < 0)
        throw std::invalid_argument("worst_payoff: a degenerate class has no worst payoff");
    return tree.payoff_of(worst, player);
}

namespace detail {

inline void check_state(const GameTree& tree, int c_prev, const std::vector<int>& eta) {
    if (eta.empty())
        throw std::invalid_argument("Newcombian state must have order >= 1");
    const std::vector<int>& kids = tree.children(c_prev);
    for (std::size_t j = 0; j < eta.size(); ++j) {
        bool is_child = false;
        for (int c : kids) is_child |= (c == eta[j]);
        if (!is_child)
            throw std::invalid_argument("Newcombian state element is not a child of the move");
        if (j + 1 < eta.size() && eta[j] == eta[j + 1])
            throw std::invalid_argument("Newcombian state has equal consecutive elements");
    }
}

// P(p): outcomes of I_prev outside the subtree of pure(p) that are strictly
// worse (for the player at c_prev) than every outcome targeted by p. Empty
// when T(p) is empty.
inline OutcomeSet discarded_by(const GameTree& tree, int c_prev, const OutcomeSet& I_prev,
                               int pure, const OutcomeSet& targeted) {
    OutcomeSet out(I_prev.universe());
    if (targeted.empty()) return out;
    int player = tree.owner(c_prev);
    int wp = tree.payoff_of(worst_outcome_in(tree, targeted, player), player);
    OutcomeSet outside = I_prev - tree.outcome_descendants(pure);
    outside.for_each([&](int oix) {
        if (tree.payoff_of(oix, player) < wp) out.insert(oix);
    });
    return out;
}

} // namespace detail

// Target function T of a Newcombian state at move c_prev given survivors
// I_prev: order 1 targets I_prev ∩ D(eta_1); higher orders additionally
// exclude the outcomes discarded by the state's discarding part.
inline OutcomeSet target(const GameTree& tree, int c_prev, const OutcomeSet& I_prev,
                         const std::vector<int>& eta) {
    detail::check_state(tree, c_prev, eta);
    OutcomeSet t = I_prev & tree.outcome_descendants(eta[0]);
    if (eta.size() == 1) return t;
    std::vector<int> part(eta.begin() + 1, eta.end());
    OutcomeSet tp = target(tree, c_prev, I_prev, part);
    return t - detail::discarded_by(tree, c_prev, I_prev, part[0], tp);
}

namespace detail {

struct ClassIteration {
    NewcombianClass final_class;
    std::vector<int> wp_sequence; // strictly increasing
    std::vector<Discard> marks;   // first preemption mark per outcome, discovery order
    int order = 1;                // K
};

// Induction over the class order k: start from the order-1 class with the
// highest worst payoff, then repeatedly move to the best non-degenerate class
// (n, current) over the siblings n of the current pure part. Terminates when
// every sibling yields a degenerate class; the survivors are then exactly the
// final class's targeted set.
inline ClassIteration run_class_iteration(const GameTree& tree, int c_prev,
                                          const OutcomeSet& I_prev) {
    int player = tree.owner(c_prev);
    ClassIteration it;

    NewcombianClass current;
    bool have = false;
    for (int f : tree.children(c_prev)) {
        OutcomeSet t = I_prev & tree.outcome_descendants(f);
        if (t.empty()) continue;
        int wp = tree.payoff_of(worst_outcome_in(tree, t, player), player);
        if (!have || wp > current.worst_payoff) {
            current = NewcombianClass{f, wp, t, {f}};
            have = true;
        }
    }
    assert(have && "I_prev must contain a descendant of some child");

    OutcomeSet marked(I_prev.universe());
    int k = 1;
    for (;;) {
        it.wp_sequence.push_back(current.worst_payoff);
        OutcomeSet pset = discarded_by(tree, c_prev, I_prev, current.pure, current.targeted);
        (pset - marked).for_each([&](int oix) {
            Discard d;
            d.outcome = tree.outcome_entry(oix);
            d.principle = Principle::preemption;
            d.witness_state = current.state;
            d.substep = k;
            it.marks.push_back(std::move(d));
        });
        marked |= pset;

        NewcombianClass next;
        bool found = false;
        for (int n : tree.children(c_prev)) {
            if (n == current.pure) continue;
            OutcomeSet t = (I_prev & tree.outcome_descendants(n)) - pset;
            if (t.empty()) continue; // degenerate class, cannot discard anything
            int wp = tree.payoff_of(worst_outcome_in(tree, t, player), player);
            if (!found || wp > next.worst_payoff) {
                std::vector<int> state;
                state.reserve(current.state.size() + 1);
                state.push_back(n);
                state.insert(state.end(), current.state.begin(), current.state.end());
                next = NewcombianClass{n, wp, t, std::move(state)};
                found = true;
            }
        }
        if (!found) break;
        current = std::move(next);
        ++k;
    }
    it.final_class = std::move(current);
    it.order = k;
    return it;
}

} // namespace detail

// Best Newcombian class at c_prev: the unique class that discards every
// outcome targeted by the brothers of its pure part.
inline NewcombianClass best_class(const GameTree& tree, int c_prev, const OutcomeSet& I_prev) {
    return detail::run_class_iteration(tree, c_prev, I_prev).final_class;
}

// One step of the construction: find the best class, move to its pure part,
// survive its targeted set, and record every discarded outcome with the
// principle and witness that justifies it. Discards made by a class of order
// k < K are preemptions; the remainder falls out of the final selection.
inline StepRecord ppe_step(const GameTree& tree, int c_prev, const OutcomeSet& I_prev,
                           int step_index = 2) {
    assert(!tree.is_outcome(c_prev));
    assert(!I_prev.empty());
    detail::ClassIteration it = detail::run_class_iteration(tree, c_prev, I_prev);

    StepRecord rec;
    rec.index = step_index;
    rec.at = c_prev;
    rec.move = it.final_class.pure;
    rec.surviving = it.final_class.targeted;
    rec.class_worst_payoffs = it.wp_sequence;

    OutcomeSet gone = I_prev - rec.surviving;
    OutcomeSet preempted(I_prev.universe());
    for (Discard& d : it.marks) {
        if (d.substep >= it.order) continue; // final-class marks are not preemptions
        assert(gone.contains(tree.outcome_index(d.outcome)));
        preempted.insert(tree.outcome_index(d.outcome));
        rec.discards.push_back(std::move(d));
    }
    (gone - preempted).for_each([&](int oix) {
        Discard d;
        d.outcome = tree.outcome_entry(oix);
        d.principle = Principle::rational_choice;
        d.witness_move = rec.move;
        d.substep = it.order;
        rec.discards.push_back(std::move(d));
    });

    // step invariants: the current player's argmax survives, and the
    // survivors all descend from the single chosen child
    assert(rec.surviving.contains(
        best_outcome_in(tree, I_prev, tree.owner(c_prev))));
    assert(rec.surviving.is_subset_of(tree.outcome_descendants(rec.move)));
    return rec;
}

// Forward induction from the root: iterate ppe_step until a single outcome
// survives. Existence and uniqueness hold for every valid tree.
inline GeneralSolveResult solve_ppe_general(const GameTree& tree) {
    GeneralSolveResult r;
    int c = tree.root();
    OutcomeSet survivors = tree.all_outcomes();
    r.path.push_back(c);
    int i = 2;
    while (!tree.is_outcome(c)) {
        StepRecord rec = ppe_step(tree, c, survivors, i++);
        c = rec.move;
        survivors = rec.surviving;
        r.path.push_back(c);
        r.trace.steps.push_back(std::move(rec));
    }
    assert(survivors.count() == 1 &&
           survivors.contains(tree.outcome_index(c)));
    r.outcome = c;
    r.trace.final_outcome = c;
    return r;
}

} // namespace ppe
