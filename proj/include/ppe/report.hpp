#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppe/analysis.hpp"
#include "ppe/game_tree.hpp"
#include "ppe/logic.hpp"
#include "ppe/ppe_general.hpp"
#include "ppe/ppe_quick.hpp"
#include "ppe/spe.hpp"

// Line-oriented `key: value` reports with stable key order and deterministic
// set formatting, so that command output can be diffed byte for byte.

namespace ppe {

inline std::string path_string(const GameTree& tree, const std::vector<int>& path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += ' ';
        s += entry_name(tree, path[i]);
    }
    return s;
}

inline std::string payoffs_string(const std::vector<int>& payoffs) {
    std::string s;
    for (std::size_t i = 0; i < payoffs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(payoffs[i]);
    }
    return s;
}

// Members as "o<id>" sorted by id.
inline std::string outcome_set_string(const GameTree& tree, const OutcomeSet& set) {
    std::vector<NodeId> ids;
    set.for_each([&](int oix) { ids.push_back(tree.id(tree.outcome_entry(oix))); });
    std::sort(ids.begin(), ids.end());
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ' ';
        s += "o" + std::to_string(ids[i]);
    }
    return s;
}

inline std::string witness_string(const GameTree& tree, const Discard& d) {
    if (d.principle == Principle::rational_choice) return entry_name(tree, d.witness_move);
    std::string s = "(";
    for (std::size_t i = 0; i < d.witness_state.size(); ++i) {
        if (i) s += ',';
        s += entry_name(tree, d.witness_state[i]);
    }
    return s + ")";
}

inline std::string render_trace(const GameTree& tree, const EliminationTrace& trace) {
    std::string s;
    for (const StepRecord& step : trace.steps) {
        s += "step: " + std::to_string(step.index) + "\n";
        s += "at: " + entry_name(tree, step.at) + "\n";
        s += "move: " + entry_name(tree, step.move) + "\n";
        s += "surviving: " + outcome_set_string(tree, step.surviving) + "\n";
        for (const Discard& d : step.discards) {
            s += "discard: " + entry_name(tree, d.outcome) +
                 " principle=" + std::to_string(static_cast<int>(d.principle)) +
                 " witness=" + witness_string(tree, d) + "\n";
        }
    }
    return s;
}

inline std::string render_solve_report(const GameTree& tree, const std::string& method,
                                       const std::vector<int>& path, int outcome,
                                       const EliminationTrace* trace = nullptr,
                                       bool include_trace = false) {
    std::string s;
    s += "method: " + method + "\n";
    s += "path: " + path_string(tree, path) + "\n";
    s += "outcome: " + entry_name(tree, outcome) + "\n";
    s += "payoffs: " + payoffs_string(tree.payoffs(outcome)) + "\n";
    if (trace) {
        s += "steps: " + std::to_string(trace->steps.size()) + "\n";
        if (include_trace) s += render_trace(tree, *trace);
    }
    return s;
}

inline std::string render_compare_report(const GameTree& tree, const ComparisonReport& r) {
    std::string s;
    s += "spe_outcome: " + entry_name(tree, r.spe_outcome) + "\n";
    s += "spe_payoffs: " + payoffs_string(r.spe_payoffs) + "\n";
    s += "ppe_outcome: " + entry_name(tree, r.ppe_outcome) + "\n";
    s += "ppe_payoffs: " + payoffs_string(r.ppe_payoffs) + "\n";
    s += std::string("equal: ") + (r.equal ? "true" : "false") + "\n";
    s += std::string("ppe_pareto_improves_spe: ") +
         (r.ppe_pareto_improves_spe ? "true" : "false") + "\n";
    return s;
}

inline std::string render_biped_table(const std::vector<BipedRow>& rows) {
    std::string s;
    int equal = 0;
    for (const BipedRow& r : rows) {
        const BipedGame& g = r.game;
        GameTree tree = biped_tree(g);
        s += "case=" + g.case_label;
        s += " a=" + std::to_string(g.a) + " b=" + std::to_string(g.b) +
             " c=" + std::to_string(g.c);
        s += " d=" + std::to_string(g.d) + " e=" + std::to_string(g.e) +
             " f=" + std::to_string(g.f);
        s += " spe=" + entry_name(tree, r.report.spe_outcome);
        s += " ppe=" + entry_name(tree, r.report.ppe_outcome);
        s += std::string(" equal=") + (r.report.equal ? "true" : "false") + "\n";
        equal += r.report.equal;
    }
    s += "games: " + std::to_string(rows.size()) + "\n";
    s += "identical: " + std::to_string(equal) + "\n";
    s += "different: " + std::to_string(rows.size() - equal) + "\n";
    return s;
}

inline std::string equation_body(const GameTree& tree, const Equation& e) {
    auto var = [&](int v) { return "S[" + entry_name(tree, v) + "]"; };
    std::string s;
    if (e.kind == Equation::Kind::causal_bridge) {
        s += var(e.subject) + " => ";
        int parent = tree.parent(e.subject);
        if (parent < 0) return s + "true";
        s += var(parent);
        for (int sib : tree.children(parent))
            if (sib != e.subject) s += " & !" + var(sib);
        return s;
    }
    std::vector<std::pair<NodeId, int>> premise;
    e.premise.for_each([&](int oix) {
        premise.emplace_back(tree.id(tree.outcome_entry(oix)), tree.outcome_entry(oix));
    });
    std::sort(premise.begin(), premise.end());
    for (auto& [id, v] : premise) s += "!" + var(v) + " & ";
    if (e.kind == Equation::Kind::first_principle)
        s += var(e.subject);
    else if (premise.empty())
        s += "true";
    else
        s.erase(s.size() - 3); // trailing " & "
    return s + " => " + var(e.conclusion);
}

inline std::string render_verify_report(const GameTree& tree, const LogicSolveResult& logic,
                                        int general_outcome, int quick_outcome) {
    const EquationSystem& sys = logic.system;
    std::string s;
    s += "variables: " + std::to_string(tree.size()) + "\n";
    s += "equations: " + std::to_string(sys.equations.size()) + "\n";
    s += "causal_bridge: " + std::to_string(sys.causal_count) + "\n";
    s += "first_principle: " + std::to_string(sys.first_count) + "\n";
    s += "second_principle: " + std::to_string(sys.second_count) + "\n";
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
        s += "eq[" + std::to_string(i) + "]: " + sys.equations[i].tag + ": " +
             equation_body(tree, sys.equations[i]) + "\n";

    PowersetGraph graph = build_powerset_component(tree);
    s += "component_vertices: " + std::to_string(graph.vertices.size()) + "\n";
    for (const OutcomeSet& u : graph.vertices)
        s += "vertex: " + detail::premise_tag(tree, u) + "\n";

    s += "assignment:";
    for (int v = 0; v < tree.size(); ++v)
        s += " " + entry_name(tree, v) + "=" + (logic.assignment[v] ? "1" : "0");
    s += "\n";
    s += "logic_outcome: " + entry_name(tree, logic.outcome) + "\n";
    s += "general_outcome: " + entry_name(tree, general_outcome) + "\n";
    s += "quick_outcome: " + entry_name(tree, quick_outcome) + "\n";
    bool agree = logic.outcome == general_outcome && logic.outcome == quick_outcome;
    s += std::string("agreement: ") + (agree ? "true" : "false") + "\n";
    return s;
}

// Directed graph of the game: decision nodes labeled "n<id>:P<owner>",
// outcomes labeled with their payoff vector. The equilibrium path carries
// ppe=true (its final outcome too); discarded outcomes carry the step and
// principle of their elimination.
inline std::string render_dot(const GameTree& tree, const GeneralSolveResult& solved) {
    std::map<int, const Discard*> discarded; // entry -> discard
    std::map<int, int> discard_step;
    for (const StepRecord& step : solved.trace.steps)
        for (const Discard& d : step.discards) {
            discarded[d.outcome] = &d;
            discard_step[d.outcome] = step.index;
        }
    std::vector<bool> path_entry(tree.size(), false);
    for (int v : solved.path) path_entry[v] = true;

    std::string s = "digraph game {\n";
    for (int v = 0; v < tree.size(); ++v) {
        s += "  " + entry_name(tree, v) + " [label=\"";
        if (tree.is_outcome(v)) {
            s += entry_name(tree, v) + " (";
            const std::vector<int>& pay = tree.payoffs(v);
            for (std::size_t i = 0; i < pay.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(pay[i]);
            }
            s += ")\"";
            if (v == solved.outcome) s += " ppe=true";
            auto it = discarded.find(v);
            if (it != discarded.end())
                s += " discarded=" + std::to_string(discard_step[v]) +
                     " principle=" + std::to_string(static_cast<int>(it->second->principle));
        } else {
            s += entry_name(tree, v) + ":P" + std::to_string(tree.owner(v)) + "\"";
        }
        s += "];\n";
    }
    for (int v = 0; v < tree.size(); ++v) {
        if (tree.is_outcome(v)) continue;
        for (int c : tree.children(v)) {
            s += "  " + entry_name(tree, v) + " -> " + entry_name(tree, c);
            if (path_entry[v] && path_entry[c]) s += " [ppe=true]";
            s += ";\n";
        }
    }
    s += "}\n";
    return s;
}

} // namespace ppe
