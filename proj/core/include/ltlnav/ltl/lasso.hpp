// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#ifndef LTLNAV_LTL_LASSO_HPP
#define LTLNAV_LTL_LASSO_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ltlnav/ltl/formula.hpp"

namespace ltlnav::ltl {

// A symbol is a subset of the alphabet, one bit per atom index. Alphabets
// stay small here (object classes), so 64 bits is plenty.
using Symbol = std::uint64_t;

// Ultimately periodic word prefix . cycle^omega. The cycle must be nonempty.
struct LassoWord {
    std::vector<Symbol> prefix;
    std::vector<Symbol> cycle;

    LassoWord() = default;
    LassoWord(std::vector<Symbol> p, std::vector<Symbol> c);

    // Number of distinct positions (prefix + one cycle unrolling).
    std::size_t fold_size() const { return prefix.size() + cycle.size(); }

    // Map an absolute position into the folded index range.
    std::size_t fold(std::size_t pos) const {
        if (pos < prefix.size()) return pos;
        return prefix.size() + (pos - prefix.size()) % cycle.size();
    }

    const Symbol& at_folded(std::size_t idx) const {
        return idx < prefix.size() ? prefix[idx] : cycle[idx - prefix.size()];
    }
};

// Build a symbol from atom names, interning unseen names into the store.
Symbol make_symbol(FormulaStore& store, std::initializer_list<const char*> atoms);

// Direct LTL semantics at position 0 of w^omega. Evaluates the surface AST
// (including Implies/F/G) by a bottom-up table over (subformula, folded
// position); independent of the automaton path, which is the point: this is
// the oracle the tableau translation is checked against.
bool eval_lasso(const FormulaStore& store, FormulaId f, const LassoWord& w);

}  // namespace ltlnav::ltl

#endif  // LTLNAV_LTL_LASSO_HPP
