#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ppe/game_tree.hpp"

namespace ppe {

// Game description format ("EFG-lite"):
//
//   game   ::= expr
//   expr   ::= node | leaf
//   node   ::= '(' 'n' INT player expr+ ')'
//   leaf   ::= '(' 'o' INT INT+ ')'     ; payoffs in player-index order
//   player ::= 'P' INT                  ; 0-based player index
//   INT    ::= '-'? [0-9]+
//
// UTF-8 text, whitespace-insensitive between tokens. The player count is
// inferred as the (required-uniform) payoff arity of the leaves.

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what),
          line(line),
          column(column) {}

    int line;
    int column;
};

namespace detail {

class EfgParser {
public:
    explicit EfgParser(std::string_view text) : text_(text) {}

    RawNode parse() {
        RawNode root = expr();
        skip_space();
        if (pos_ < text_.size())
            fail("trailing input after game expression");
        return root;
    }

private:
    RawNode expr() {
        expect('(');
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char tag = text_[pos_];
        if (tag == 'n') {
            ++pos_, ++col_;
            RawNode n;
            n.id = integer("node id");
            if (n.id < 0) fail("node id must be non-negative");
            skip_space();
            expect('P');
            n.player = integer("player index");
            skip_space();
            if (peek() == ')') fail("empty node: a node needs at least one child");
            while (peek() != ')') {
                n.children.push_back(expr());
                skip_space();
            }
            expect(')');
            return n;
        }
        if (tag == 'o') {
            ++pos_, ++col_;
            RawNode n;
            n.id = integer("outcome id");
            if (n.id < 0) fail("outcome id must be non-negative");
            skip_space();
            if (peek() == ')') fail("outcome needs at least one payoff");
            while (peek() != ')') {
                n.payoffs.push_back(integer("payoff"));
                skip_space();
            }
            expect(')');
            return n;
        }
        fail("expected 'n' or 'o'");
        return {};
    }

    char peek() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_, ++col_;
    }

    int integer(const char* what) {
        skip_space();
        bool neg = pos_ < text_.size() && text_[pos_] == '-';
        if (neg) ++pos_, ++col_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 2147483647LL) fail(std::string(what) + " out of range");
            ++pos_, ++col_;
        }
        return neg ? -static_cast<int>(value) : static_cast<int>(value);
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_, ++col_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace detail

inline GameTree parse_game(std::string_view text) {
    detail::EfgParser parser(text);
    return GameTree(parser.parse());
}

inline GameTree parse_game(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return parse_game(std::string_view(text));
}

inline void serialize_game(const GameTree& tree, int v, std::string& out) {
    out += '(';
    if (tree.is_outcome(v)) {
        out += 'o';
        out += std::to_string(tree.id(v));
        for (int p : tree.payoffs(v)) {
            out += ' ';
            out += std::to_string(p);
        }
    } else {
        out += 'n';
        out += std::to_string(tree.id(v));
        out += " P";
        out += std::to_string(tree.owner(v));
        for (int c : tree.children(v)) {
            out += ' ';
            serialize_game(tree, c, out);
        }
    }
    out += ')';
}

// Canonical text form; parse_game(serialize_game(t)) is structurally equal to t.
inline std::string serialize_game(const GameTree& tree) {
    std::string out;
    serialize_game(tree, tree.root(), out);
    return out;
}

} // namespace ppe
