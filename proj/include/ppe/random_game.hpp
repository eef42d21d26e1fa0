#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ppe/game_tree.hpp"

namespace ppe {

// Small hand-rolled generator (splitmix64) so that generated games are
// byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    bool coin() { return next() & 1; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[static_cast<std::size_t>(below(i + 1))]);
    }

private:
    std::uint64_t state_;
};

namespace detail {

inline void random_shape(Rng& rng, RawNode& node, int depth, int max_depth,
                         int max_branching, int players, NodeId& next_id, int& leaves) {
    node.id = next_id++;
    if (depth == max_depth) {
        node.payoffs.assign(1, 0); // placeholder, replaced by permutations below
        ++leaves;
        return;
    }
    node.player = rng.below(players);
    int kids = 1 + rng.below(max_branching);
    node.children.resize(kids);
    for (RawNode& child : node.children) {
        if (depth + 1 < max_depth && rng.below(4) != 0) {
            random_shape(rng, child, depth + 1, max_depth, max_branching, players,
                         next_id, leaves);
        } else {
            child.id = next_id++;
            child.payoffs.assign(1, 0);
            ++leaves;
        }
    }
}

inline void assign_payoffs(RawNode& node, const std::vector<std::vector<int>>& perms,
                           int& leaf_index) {
    if (node.children.empty()) {
        node.payoffs.clear();
        for (const auto& perm : perms) node.payoffs.push_back(perm[leaf_index]);
        ++leaf_index;
        return;
    }
    for (RawNode& child : node.children) assign_payoffs(child, perms, leaf_index);
}

} // namespace detail

// Deterministic in `seed`. The root is always a decision node; children become
// leaves at the depth limit or by a coin flip. Per-player payoffs are a random
// permutation of 0..(#outcomes-1), which guarantees strict preferences.
inline GameTree random_game(std::uint64_t seed, int players, int max_depth,
                            int max_branching) {
    if (players < 2) throw std::invalid_argument("random_game: players must be >= 2");
    if (max_depth < 1) throw std::invalid_argument("random_game: max_depth must be >= 1");
    if (max_branching < 1)
        throw std::invalid_argument("random_game: max_branching must be >= 1");

    Rng rng(seed);
    RawNode root;
    NodeId next_id = 0;
    int leaves = 0;
    detail::random_shape(rng, root, 0, max_depth, max_branching, players, next_id, leaves);

    std::vector<std::vector<int>> perms(players);
    for (auto& perm : perms) {
        perm.resize(leaves);
        for (int i = 0; i < leaves; ++i) perm[i] = i;
        rng.shuffle(perm);
    }
    int leaf_index = 0;
    detail::assign_payoffs(root, perms, leaf_index);
    return GameTree(root);
}

} // namespace ppe
