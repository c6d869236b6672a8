// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#include "ltlnav/ltl/lasso.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ltlnav::ltl {

LassoWord::LassoWord(std::vector<Symbol> p, std::vector<Symbol> c)
    : prefix(std::move(p)), cycle(std::move(c)) {
    if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
}

Symbol make_symbol(FormulaStore& store, std::initializer_list<const char*> atoms) {
    Symbol s = 0;
    for (const char* a : atoms) s |= Symbol{1} << store.atom_index(a);
    return s;
}

namespace {

// Truth table for one subformula over all folded positions.
using Row = std::vector<char>;

// Scan forward from position p through the folded successor chain. Visits
// at most fold_size()+1 positions before the walk provably repeats.
template <typename Decide>
bool walk(const LassoWord& w, std::size_t p, Decide&& decide, bool exhausted_value) {
    std::size_t pos = p;
    const std::size_t limit = w.fold_size() + 1;
    for (std::size_t steps = 0; steps < limit; ++steps) {
        int verdict = decide(pos);
        if (verdict >= 0) return verdict != 0;
        pos = w.fold(pos + 1);
    }
    return exhausted_value;
}

}  // namespace

bool eval_lasso(const FormulaStore& store, FormulaId f, const LassoWord& w) {
    const std::size_t npos = w.fold_size();

    // Child ids are smaller than parent ids, so filling tables in id order
    // is bottom-up. Only rows for subformulas of f are materialized.
    std::unordered_map<FormulaId, Row> table;

    // Collect the subformula set of f.
    std::vector<FormulaId> subs;
    {
        std::vector<FormulaId> stack{f};
        std::unordered_map<FormulaId, bool> seen;
        while (!stack.empty()) {
            FormulaId id = stack.back();
            stack.pop_back();
            if (seen.count(id)) continue;
            seen.emplace(id, true);
            subs.push_back(id);
            const FormulaNode& n = store.node(id);
            if (n.lhs != kNoFormula) stack.push_back(n.lhs);
            if (n.rhs != kNoFormula) stack.push_back(n.rhs);
        }
        std::sort(subs.begin(), subs.end());
    }

    auto succ = [&w](std::size_t p) { return w.fold(p + 1); };

    for (FormulaId id : subs) {
        const FormulaNode& n = store.node(id);
        Row row(npos, 0);
        auto lhs = [&](std::size_t p) -> bool { return table[n.lhs][p] != 0; };
        auto rhs = [&](std::size_t p) -> bool { return table[n.rhs][p] != 0; };
        for (std::size_t p = 0; p < npos; ++p) {
            bool v = false;
            switch (n.op) {
                case Op::True: v = true; break;
                case Op::False: v = false; break;
                case Op::Atom: v = (w.at_folded(p) >> n.atom) & 1; break;
                case Op::Not: v = !lhs(p); break;
                case Op::And: v = lhs(p) && rhs(p); break;
                case Op::Or: v = lhs(p) || rhs(p); break;
                case Op::Implies: v = !lhs(p) || rhs(p); break;
                case Op::Next: v = lhs(succ(p)); break;
                case Op::Until:
                    v = walk(
                        w, p,
                        [&](std::size_t q) -> int {
                            if (rhs(q)) return 1;
                            if (!lhs(q)) return 0;
                            return -1;
                        },
                        false);
                    break;
                case Op::Release:
                    v = walk(
                        w, p,
                        [&](std::size_t q) -> int {
                            if (!rhs(q)) return 0;
                            if (lhs(q)) return 1;
                            return -1;
                        },
                        true);
                    break;
                case Op::Eventually:
                    v = walk(
                        w, p, [&](std::size_t q) -> int { return lhs(q) ? 1 : -1; }, false);
                    break;
                case Op::Always:
                    v = walk(
                        w, p, [&](std::size_t q) -> int { return lhs(q) ? -1 : 0; }, true);
                    break;
            }
            row[p] = v ? 1 : 0;
        }
        table.emplace(id, std::move(row));
    }
    return table[f][0] != 0;
}

}  // namespace ltlnav::ltl
