#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppe/outcome_set.hpp"

namespace ppe {

// Textual id carried by every node and outcome of a game description.
using NodeId = int;

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Mutable description of a (sub)tree, used to assemble games programmatically
// before freezing them into a GameTree.
struct RawNode {
    NodeId id = -1;
    int player = -1;              // >= 0 marks a decision node
    std::vector<int> payoffs;     // nonempty marks an outcome
    std::vector<RawNode> children;

    static RawNode outcome(NodeId id, std::vector<int> payoffs) {
        RawNode n;
        n.id = id;
        n.payoffs = std::move(payoffs);
        return n;
    }

    static RawNode node(NodeId id, int player, std::vector<RawNode> children) {
        RawNode n;
        n.id = id;
        n.player = player;
        n.children = std::move(children);
        return n;
    }
};

// Immutable finite game in extensive form with perfect information and strict
// preferences. Decision nodes carry an owner and an ordered child list; leaves
// carry one integer payoff per player; per player all payoffs are pairwise
// distinct. Entries are stored in preorder; algorithms address them by entry
// index, outcomes additionally by a dense outcome index used in OutcomeSet.
//
// Immutable after construction; safe to share across concurrent solver runs.
class GameTree {
public:
    explicit GameTree(const RawNode& root) {
        build(root, -1, 0);
        finish();
    }

    int player_count() const { return players_; }
    int root() const { return 0; }
    int size() const { return static_cast<int>(entries_.size()); }
    int outcome_count() const { return static_cast<int>(outcomes_.size()); }
    int node_count() const { return size() - outcome_count(); }

    bool is_outcome(int v) const { return !entries_[v].payoffs.empty(); }
    NodeId id(int v) const { return entries_[v].id; }

    int index_of(NodeId id) const {
        auto it = by_id_.find(id);
        if (it == by_id_.end())
            throw ValidationError("unknown id: " + std::to_string(id));
        return it->second;
    }

    bool has_id(NodeId id) const { return by_id_.count(id) != 0; }

    int owner(int v) const { return entries_[v].player; }
    const std::vector<int>& children(int v) const { return entries_[v].children; }
    int parent(int v) const { return entries_[v].parent; }
    int depth_of(int v) const { return entries_[v].depth; }
    int depth() const { return depth_; }

    const std::vector<int>& payoffs(int v) const { return entries_[v].payoffs; }
    int payoff(int v, int player) const { return entries_[v].payoffs[player]; }

    int outcome_index(int v) const { return entries_[v].outcome_index; }
    int outcome_entry(int oix) const { return outcomes_[oix]; }
    int payoff_of(int oix, int player) const { return payoff(outcomes_[oix], player); }

    // D(v) restricted to outcomes; reflexive on outcomes.
    const OutcomeSet& outcome_descendants(int v) const { return entries_[v].descendants; }

    OutcomeSet all_outcomes() const { return OutcomeSet::all(outcome_count()); }

    RawNode to_raw() const { return to_raw(root()); }

    RawNode to_raw(int v) const {
        RawNode r;
        r.id = entries_[v].id;
        if (is_outcome(v)) {
            r.payoffs = entries_[v].payoffs;
        } else {
            r.player = entries_[v].player;
            for (int c : entries_[v].children) r.children.push_back(to_raw(c));
        }
        return r;
    }

    // Structural equality: same shape, ids, owners and payoffs in order.
    bool structurally_equal(const GameTree& o) const {
        if (size() != o.size()) return false;
        for (int v = 0; v < size(); ++v) {
            const Entry& a = entries_[v];
            const Entry& b = o.entries_[v];
            if (a.id != b.id || a.player != b.player || a.payoffs != b.payoffs ||
                a.children != b.children)
                return false;
        }
        return true;
    }

private:
    struct Entry {
        NodeId id;
        int player = -1;
        std::vector<int> payoffs;
        std::vector<int> children;
        int parent = -1;
        int depth = 0;
        int outcome_index = -1;
        OutcomeSet descendants;
    };

    int build(const RawNode& raw, int parent, int depth) {
        if (raw.id < 0)
            throw ValidationError("node id must be non-negative");
        bool leaf = !raw.payoffs.empty();
        if (leaf && (raw.player >= 0 || !raw.children.empty()))
            throw ValidationError("outcome " + std::to_string(raw.id) +
                                  " cannot have a player or children");
        if (!leaf && raw.player < 0)
            throw ValidationError("node " + std::to_string(raw.id) + " has no player");
        if (!leaf && raw.children.empty())
            throw ValidationError("empty node: " + std::to_string(raw.id));

        int v = static_cast<int>(entries_.size());
        entries_.emplace_back();
        entries_[v].id = raw.id;
        entries_[v].parent = parent;
        entries_[v].depth = depth;
        depth_ = std::max(depth_, depth);
        if (!by_id_.emplace(raw.id, v).second)
            throw ValidationError("duplicate id: " + std::to_string(raw.id));

        if (leaf) {
            entries_[v].payoffs = raw.payoffs;
            entries_[v].outcome_index = static_cast<int>(outcomes_.size());
            outcomes_.push_back(v);
        } else {
            entries_[v].player = raw.player;
            std::vector<int> kids;
            kids.reserve(raw.children.size());
            for (const RawNode& c : raw.children) kids.push_back(build(c, v, depth + 1));
            entries_[v].children = std::move(kids);
        }
        return v;
    }

    void finish() {
        if (outcomes_.empty())
            throw ValidationError("game has no outcomes");
        players_ = static_cast<int>(entries_[outcomes_[0]].payoffs.size());
        if (players_ < 2)
            throw ValidationError("at least 2 players required (payoff arity " +
                                  std::to_string(players_) + ")");
        for (int v : outcomes_)
            if (static_cast<int>(entries_[v].payoffs.size()) != players_)
                throw ValidationError("payoff arity mismatch at outcome " +
                                      std::to_string(entries_[v].id));
        for (int v = 0; v < size(); ++v)
            if (!is_outcome(v) && entries_[v].player >= players_)
                throw ValidationError("player index " + std::to_string(entries_[v].player) +
                                      " out of range at node " + std::to_string(entries_[v].id));

        // strict preferences: per player, all payoffs pairwise distinct
        for (int p = 0; p < players_; ++p) {
            std::set<int> seen;
            for (int v : outcomes_)
                if (!seen.insert(entries_[v].payoffs[p]).second)
                    throw ValidationError("strict-preference violation for player " +
                                          std::to_string(p) + " (payoff " +
                                          std::to_string(entries_[v].payoffs[p]) +
                                          " occurs twice)");
        }

        int n = outcome_count();
        for (int v = size() - 1; v >= 0; --v) {
            Entry& e = entries_[v];
            e.descendants = OutcomeSet(n);
            if (is_outcome(v)) {
                e.descendants.insert(e.outcome_index);
            } else {
                for (int c : e.children) e.descendants |= entries_[c].descendants;
            }
        }
    }

    std::vector<Entry> entries_;
    std::vector<int> outcomes_;
    std::unordered_map<NodeId, int> by_id_;
    int players_ = 0;
    int depth_ = 0;
};

// D(n) restricted to outcomes, as textual ids in ascending order.
inline std::vector<NodeId> descendant_outcome_ids(const GameTree& tree, NodeId id) {
    std::vector<NodeId> out;
    tree.outcome_descendants(tree.index_of(id)).for_each([&](int oix) {
        out.push_back(tree.id(tree.outcome_entry(oix)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Outcome index of the member with the highest payoff for `player`; -1 on empty.
inline int best_outcome_in(const GameTree& tree, const OutcomeSet& set, int player) {
    int best = -1;
    set.for_each([&](int oix) {
        if (best < 0 || tree.payoff_of(oix, player) > tree.payoff_of(best, player))
            best = oix;
    });
    return best;
}

// Outcome index of the member with the lowest payoff for `player`; -1 on empty.
inline int worst_outcome_in(const GameTree& tree, const OutcomeSet& set, int player) {
    int worst = -1;
    set.for_each([&](int oix) {
        if (worst < 0 || tree.payoff_of(oix, player) < tree.payoff_of(worst, player))
            worst = oix;
    });
    return worst;
}

} // namespace ppe
