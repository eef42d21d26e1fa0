#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppe/game_tree.hpp"

namespace ppe {

class LogicBoundExceeded : public std::runtime_error {
public:
    explicit LogicBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// "n<id>" / "o<id>" presentation used in reports and equation tags.
inline std::string entry_name(const GameTree& tree, int v) {
    return (tree.is_outcome(v) ? "o" : "n") + std::to_string(tree.id(v));
}

struct ReactionPath {
    std::vector<int> nodes; // r_0 .. r_l, entry indices
    int terminal() const { return nodes.back(); }
};

struct PreemptingPath {
    int outcome = -1;  // o: the outcome made impossible
    int terminal = -1; // r_l: the child the player deviates to
};

// The unique maximal dominance path of the tree pruned by `removed`: starting
// at the root, descend into a child whose surviving outcomes are all better
// than every surviving outcome of its siblings (vacuously so when the siblings
// hold no survivors), as long as such a child exists.
inline ReactionPath reaction_path(const GameTree& tree, const OutcomeSet& removed) {
    OutcomeSet survivors = tree.all_outcomes() - removed;
    if (survivors.empty())
        throw std::invalid_argument("reaction_path: all outcomes removed");

    ReactionPath r;
    int node = tree.root();
    r.nodes.push_back(node);
    while (!tree.is_outcome(node)) {
        int player = tree.owner(node);
        int next = -1;
        for (int c : tree.children(node)) {
            OutcomeSet mine = tree.outcome_descendants(c) & survivors;
            if (mine.empty()) continue;
            OutcomeSet sibs = (tree.outcome_descendants(node) & survivors) - mine;
            if (sibs.empty() ||
                tree.payoff_of(worst_outcome_in(tree, mine, player), player) >
                    tree.payoff_of(best_outcome_in(tree, sibs, player), player)) {
                next = c;
                break;
            }
        }
        if (next < 0) break;
        node = next;
        r.nodes.push_back(node);
    }
    return r;
}

// All preempting reaction paths of the pruned tree: one-step deviations from
// the end of the maximal reaction path into a subtree whose surviving outcomes
// are all better than the preempted outcome for the player moving there.
inline std::vector<PreemptingPath> preempting_paths(const GameTree& tree,
                                                    const OutcomeSet& removed) {
    OutcomeSet survivors = tree.all_outcomes() - removed;
    ReactionPath r = reaction_path(tree, removed);
    std::vector<PreemptingPath> out;
    int last = r.terminal();
    if (tree.is_outcome(last)) return out;
    int player = tree.owner(last);
    for (int c : tree.children(last)) {
        OutcomeSet mine = tree.outcome_descendants(c) & survivors;
        if (mine.empty()) continue;
        int floor = tree.payoff_of(worst_outcome_in(tree, mine, player), player);
        survivors.for_each([&](int oix) {
            if (tree.outcome_descendants(c).contains(oix)) return;
            if (tree.payoff_of(oix, player) < floor)
                out.push_back(PreemptingPath{tree.outcome_entry(oix), c});
        });
    }
    return out;
}

// Graph on sets of eliminated outcomes, restricted to the component reachable
// from the empty set. Each reaction path of T \ U contributes an edge
// U -> U ∪ (O \ D(r)); each preempting reaction path an edge U -> U ∪ {o}.
struct PowersetGraph {
    struct Edge {
        int from = -1;
        int to = -1;
        bool preempting = false;
        int outcome = -1;  // preempting edges only
        int terminal = -1; // r_l of the underlying path
    };

    std::vector<OutcomeSet> vertices; // BFS order, vertices[0] is the empty set
    std::unordered_map<OutcomeSet, int, OutcomeSetHash> index;
    std::vector<Edge> edges;

    bool has_vertex(const OutcomeSet& u) const { return index.count(u) != 0; }
};

inline PowersetGraph build_powerset_component(const GameTree& tree, int max_vertices = 4096) {
    PowersetGraph g;
    OutcomeSet empty(tree.outcome_count());
    g.vertices.push_back(empty);
    g.index.emplace(empty, 0);

    auto intern = [&](const OutcomeSet& u) {
        auto it = g.index.find(u);
        if (it != g.index.end()) return it->second;
        if (static_cast<int>(g.vertices.size()) >= max_vertices)
            throw LogicBoundExceeded("powerset component exceeds " +
                                     std::to_string(max_vertices) + " vertices");
        int ix = static_cast<int>(g.vertices.size());
        g.vertices.push_back(u);
        g.index.emplace(u, ix);
        return ix;
    };

    for (int head = 0; head < static_cast<int>(g.vertices.size()); ++head) {
        OutcomeSet u = g.vertices[head];
        ReactionPath r = reaction_path(tree, u);
        OutcomeSet reached = u | (tree.all_outcomes() - tree.outcome_descendants(r.terminal()));
        int to = intern(reached);
        g.edges.push_back(PowersetGraph::Edge{head, to, false, -1, r.terminal()});
        for (const PreemptingPath& p : preempting_paths(tree, u)) {
            OutcomeSet next = u;
            next.insert(tree.outcome_index(p.outcome));
            int to2 = intern(next);
            g.edges.push_back(PowersetGraph::Edge{head, to2, true, p.outcome, p.terminal});
        }
    }
    return g;
}

// Boolean implication over the path variables S_n (one per node and outcome).
//   causal bridge  C_n:        S_n => S_parent(n) ∧ ⋀_{s sibling of n} ¬S_s
//   first principle P1_{U,o,r}: (⋀_{p∈U} ¬S_p) ∧ S_o => S_r
//   second principle P2_{U,r}:  (⋀_{p∈U} ¬S_p) => S_r
struct Equation {
    enum class Kind { causal_bridge, first_principle, second_principle };
    Kind kind = Kind::causal_bridge;
    int subject = -1;   // causal: n, first principle: o
    OutcomeSet premise; // U, as outcome indices (first/second principle)
    int conclusion = -1; // r (first/second principle)
    std::string tag;
};

struct EquationSystem {
    const GameTree* tree = nullptr;
    std::vector<Equation> equations;
    int causal_count = 0;
    int first_count = 0;
    int second_count = 0;
};

namespace detail {

inline std::string premise_tag(const GameTree& tree, const OutcomeSet& u) {
    std::vector<NodeId> ids;
    u.for_each([&](int oix) { ids.push_back(tree.id(tree.outcome_entry(oix))); });
    std::sort(ids.begin(), ids.end());
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += "o" + std::to_string(ids[i]);
    }
    return s + "}";
}

} // namespace detail

// Emits the full system for the tree: one causal-bridge equation per node and
// outcome, one second-principle equation per component vertex, one
// first-principle equation per preempting edge.
inline EquationSystem generate_equations(const GameTree& tree, int max_vertices = 4096) {
    PowersetGraph graph = build_powerset_component(tree, max_vertices);
    EquationSystem sys;
    sys.tree = &tree;

    for (int v = 0; v < tree.size(); ++v) {
        Equation e;
        e.kind = Equation::Kind::causal_bridge;
        e.subject = v;
        e.premise = OutcomeSet(tree.outcome_count());
        e.tag = "C[" + entry_name(tree, v) + "]";
        sys.equations.push_back(std::move(e));
        ++sys.causal_count;
    }
    for (const PowersetGraph::Edge& edge : graph.edges) {
        if (!edge.preempting) continue;
        Equation e;
        e.kind = Equation::Kind::first_principle;
        e.subject = edge.outcome;
        e.premise = graph.vertices[edge.from];
        e.conclusion = edge.terminal;
        e.tag = "P1[" + detail::premise_tag(tree, e.premise) + "," +
                entry_name(tree, edge.outcome) + "," + entry_name(tree, edge.terminal) + "]";
        sys.equations.push_back(std::move(e));
        ++sys.first_count;
    }
    for (const PowersetGraph::Edge& edge : graph.edges) {
        if (edge.preempting) continue;
        Equation e;
        e.kind = Equation::Kind::second_principle;
        e.premise = graph.vertices[edge.from];
        e.conclusion = edge.terminal;
        e.tag = "P2[" + detail::premise_tag(tree, e.premise) + "," +
                entry_name(tree, edge.terminal) + "]";
        sys.equations.push_back(std::move(e));
        ++sys.second_count;
    }
    return sys;
}

inline bool equation_holds(const GameTree& tree, const Equation& e,
                           const std::vector<bool>& value) {
    switch (e.kind) {
    case Equation::Kind::causal_bridge: {
        if (!value[e.subject]) return true;
        int parent = tree.parent(e.subject);
        if (parent < 0) return true;
        if (!value[parent]) return false;
        for (int s : tree.children(parent))
            if (s != e.subject && value[s]) return false;
        return true;
    }
    case Equation::Kind::first_principle: {
        bool premise = value[e.subject];
        e.premise.for_each([&](int oix) { premise &= !value[tree.outcome_entry(oix)]; });
        return !premise || value[e.conclusion];
    }
    case Equation::Kind::second_principle: {
        bool premise = true;
        e.premise.for_each([&](int oix) { premise &= !value[tree.outcome_entry(oix)]; });
        return !premise || value[e.conclusion];
    }
    }
    return true;
}

// Brute-force oracle: enumerate every boolean assignment of the S_n and return
// the unique satisfying one. The equilibrium always exists and is unique, so
// zero or multiple solutions signal a bug; either throws.
inline std::vector<bool> solve_by_enumeration(const EquationSystem& sys, int max_vars = 24) {
    const GameTree& tree = *sys.tree;
    int vars = tree.size();
    if (vars > max_vars || vars > 62)
        throw LogicBoundExceeded("system has " + std::to_string(vars) +
                                 " variables, enumeration bound is " +
                                 std::to_string(std::min(max_vars, 62)));

    // compile the equations to bitmask tests over the entry indices
    struct Compiled {
        std::uint64_t self = 0;    // causal: S_n / P1: S_o (0 otherwise)
        std::uint64_t parent = 0;  // causal only
        std::uint64_t siblings = 0;
        std::uint64_t premise = 0; // P1/P2: bits that must all be clear
        std::uint64_t conclusion = 0;
        bool causal = false;
    };
    std::vector<Compiled> compiled;
    compiled.reserve(sys.equations.size());
    for (const Equation& e : sys.equations) {
        Compiled c;
        if (e.kind == Equation::Kind::causal_bridge) {
            c.causal = true;
            c.self = std::uint64_t{1} << e.subject;
            int parent = tree.parent(e.subject);
            if (parent >= 0) {
                c.parent = std::uint64_t{1} << parent;
                for (int s : tree.children(parent))
                    if (s != e.subject) c.siblings |= std::uint64_t{1} << s;
            }
        } else {
            if (e.kind == Equation::Kind::first_principle)
                c.self = std::uint64_t{1} << e.subject;
            e.premise.for_each([&](int oix) {
                c.premise |= std::uint64_t{1} << tree.outcome_entry(oix);
            });
            c.conclusion = std::uint64_t{1} << e.conclusion;
        }
        compiled.push_back(c);
    }

    std::uint64_t found = 0;
    int solutions = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << vars); ++m) {
        bool ok = true;
        for (const Compiled& c : compiled) {
            if (c.causal) {
                if ((m & c.self) && ((c.parent && !(m & c.parent)) || (m & c.siblings))) {
                    ok = false;
                    break;
                }
            } else {
                bool premise = !(m & c.premise) && (!c.self || (m & c.self));
                if (premise && !(m & c.conclusion)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            if (++solutions > 1)
                throw std::logic_error("equation system has multiple solutions");
            found = m;
        }
    }
    if (solutions == 0) throw std::logic_error("equation system has no solution");

    std::vector<bool> value(vars, false);
    for (int v = 0; v < vars; ++v) value[v] = (found >> v) & 1;
    return value;
}

struct LogicSolveResult {
    std::vector<int> path;
    int outcome = -1;
    std::vector<bool> assignment;
    EquationSystem system;
};

// Full pipeline: generate the system, enumerate, and read the equilibrium path
// off the unique assignment's true variables.
inline LogicSolveResult solve_ppe_logic(const GameTree& tree, int max_vars = 24,
                                        int max_vertices = 4096) {
    LogicSolveResult r;
    r.system = generate_equations(tree, max_vertices);
    r.assignment = solve_by_enumeration(r.system, max_vars);

    int trues = 0;
    for (bool b : r.assignment) trues += b;
    int node = tree.root();
    if (!r.assignment[node]) throw std::logic_error("solution does not contain the root");
    r.path.push_back(node);
    while (!tree.is_outcome(node)) {
        int next = -1;
        for (int c : tree.children(node)) {
            if (r.assignment[c]) {
                if (next >= 0) throw std::logic_error("solution branches");
                next = c;
            }
        }
        if (next < 0) throw std::logic_error("solution path is interrupted");
        node = next;
        r.path.push_back(node);
    }
    if (trues != static_cast<int>(r.path.size()))
        throw std::logic_error("solution contains variables off the path");
    r.outcome = node;
    return r;
}

} // namespace ppe
