// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#include "ltlnav/ltl/parser.hpp"

#include <cctype>
#include <vector>

#include "ltlnav/util/error.hpp"

namespace ltlnav::ltl {

namespace {

enum class Tok {
    Ident,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Next,
    Until,
    Release,
    Eventually,
    Always,
    LParen,
    RParen,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            const std::string word = text.substr(i, j - i);
            i = j;
            if (word == "true")
                out.push_back({Tok::True, word, start});
            else if (word == "false")
                out.push_back({Tok::False, word, start});
            else if (word == "X")
                out.push_back({Tok::Next, word, start});
            else if (word == "U")
                out.push_back({Tok::Until, word, start});
            else if (word == "R")
                out.push_back({Tok::Release, word, start});
            else if (word == "F")
                out.push_back({Tok::Eventually, word, start});
            else if (word == "G")
                out.push_back({Tok::Always, word, start});
            else
                out.push_back({Tok::Ident, word, start});
            continue;
        }
        auto two = (i + 1 < n) ? text.substr(i, 2) : std::string();
        if (two == "&&") {
            out.push_back({Tok::And, two, start});
            i += 2;
        } else if (two == "||") {
            out.push_back({Tok::Or, two, start});
            i += 2;
        } else if (two == "->") {
            out.push_back({Tok::Implies, two, start});
            i += 2;
        } else if (two == "<>") {
            out.push_back({Tok::Eventually, two, start});
            i += 2;
        } else if (two == "[]") {
            out.push_back({Tok::Always, two, start});
            i += 2;
        } else if (c == '!') {
            out.push_back({Tok::Not, "!", start});
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::LParen, "(", start});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", start});
            ++i;
        } else {
            throw SyntaxError(out.size() + 1, start,
                              std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", n});
    return out;
}

class Parser {
public:
    Parser(FormulaStore& store, std::vector<Token> toks, const std::set<std::string>& alphabet)
        : store_(store), toks_(std::move(toks)), alphabet_(alphabet) {}

    FormulaId run() {
        FormulaId f = parse_implies();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = peek();
        throw SyntaxError(pos_ + 1, t.offset, "expected " + expected);
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(what);
        advance();
    }

    FormulaId parse_implies() {
        FormulaId lhs = parse_or();
        if (peek().kind == Tok::Implies) {
            advance();
            return store_.implies(lhs, parse_implies());  // right associative
        }
        return lhs;
    }

    FormulaId parse_or() {
        FormulaId lhs = parse_and();
        while (peek().kind == Tok::Or) {
            advance();
            lhs = store_.or_(lhs, parse_and());
        }
        return lhs;
    }

    FormulaId parse_and() {
        FormulaId lhs = parse_until();
        while (peek().kind == Tok::And) {
            advance();
            lhs = store_.and_(lhs, parse_until());
        }
        return lhs;
    }

    FormulaId parse_until() {
        FormulaId lhs = parse_unary();
        if (peek().kind == Tok::Until) {
            advance();
            return store_.until(lhs, parse_until());  // right associative
        }
        if (peek().kind == Tok::Release) {
            advance();
            return store_.release(lhs, parse_until());
        }
        return lhs;
    }

    FormulaId parse_unary() {
        switch (peek().kind) {
            case Tok::Not:
                advance();
                return store_.not_(parse_unary());
            case Tok::Next:
                advance();
                return store_.next(parse_unary());
            case Tok::Eventually:
                advance();
                return store_.eventually(parse_unary());
            case Tok::Always:
                advance();
                return store_.always(parse_unary());
            default:
                return parse_primary();
        }
    }

    FormulaId parse_primary() {
        switch (peek().kind) {
            case Tok::True:
                advance();
                return store_.tt();
            case Tok::False:
                advance();
                return store_.ff();
            case Tok::Ident: {
                const Token t = advance();
                if (!alphabet_.count(t.text)) throw UnknownProposition(t.text);
                return store_.atom(t.text);
            }
            case Tok::LParen: {
                advance();
                FormulaId f = parse_implies();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                fail("a formula");
        }
    }

    FormulaStore& store_;
    std::vector<Token> toks_;
    const std::set<std::string>& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

FormulaId parse(FormulaStore& store, const std::string& text,
                const std::set<std::string>& alphabet) {
    if (text.empty()) throw SyntaxError(1, 0, "nonempty formula");
    return Parser(store, tokenize(text), alphabet).run();
}

}  // namespace ltlnav::ltl
