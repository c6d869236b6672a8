// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#include "ltlnav/ltl/formula.hpp"

#include <functional>

namespace ltlnav::ltl {

const char* op_name(Op op) noexcept {
    switch (op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::Atom: return "atom";
        case Op::Not: return "not";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Implies: return "implies";
        case Op::Next: return "next";
        case Op::Until: return "until";
        case Op::Release: return "release";
        case Op::Eventually: return "eventually";
        case Op::Always: return "always";
    }
    return "?";
}

std::size_t FormulaStore::NodeHash::operator()(const FormulaNode& n) const noexcept {
    std::size_t h = static_cast<std::size_t>(n.op);
    h = h * 0x9e3779b97f4a7c15ull + n.atom;
    h = h * 0x9e3779b97f4a7c15ull + n.lhs;
    h = h * 0x9e3779b97f4a7c15ull + n.rhs;
    return h;
}

FormulaStore::FormulaStore() {
    intern({Op::True});
    intern({Op::False});
}

FormulaId FormulaStore::intern(FormulaNode n) {
    auto it = intern_.find(n);
    if (it != intern_.end()) return it->second;
    const FormulaId id = static_cast<FormulaId>(nodes_.size());
    nodes_.push_back(n);
    intern_.emplace(n, id);
    return id;
}

FormulaId FormulaStore::tt() { return 0; }
FormulaId FormulaStore::ff() { return 1; }

std::uint32_t FormulaStore::atom_index(const std::string& name) {
    auto it = atom_index_.find(name);
    if (it != atom_index_.end()) return it->second;
    const auto idx = static_cast<std::uint32_t>(atom_names_.size());
    atom_names_.push_back(name);
    atom_index_.emplace(name, idx);
    return idx;
}

FormulaId FormulaStore::atom(const std::string& name) {
    return intern({Op::Atom, atom_index(name)});
}

FormulaId FormulaStore::not_(FormulaId f) { return intern({Op::Not, 0, f}); }
FormulaId FormulaStore::and_(FormulaId a, FormulaId b) { return intern({Op::And, 0, a, b}); }
FormulaId FormulaStore::or_(FormulaId a, FormulaId b) { return intern({Op::Or, 0, a, b}); }
FormulaId FormulaStore::implies(FormulaId a, FormulaId b) { return intern({Op::Implies, 0, a, b}); }
FormulaId FormulaStore::next(FormulaId f) { return intern({Op::Next, 0, f}); }
FormulaId FormulaStore::until(FormulaId a, FormulaId b) { return intern({Op::Until, 0, a, b}); }
FormulaId FormulaStore::release(FormulaId a, FormulaId b) { return intern({Op::Release, 0, a, b}); }
FormulaId FormulaStore::eventually(FormulaId f) { return intern({Op::Eventually, 0, f}); }
FormulaId FormulaStore::always(FormulaId f) { return intern({Op::Always, 0, f}); }

bool FormulaStore::is_literal(FormulaId id) const {
    const FormulaNode& n = nodes_[id];
    if (n.op == Op::True || n.op == Op::False || n.op == Op::Atom) return true;
    return n.op == Op::Not && nodes_[n.lhs].op == Op::Atom;
}

FormulaId FormulaStore::to_nnf(FormulaId f) {
    std::unordered_map<std::uint64_t, FormulaId> memo;
    return nnf_rec(f, false, memo);
}

FormulaId FormulaStore::nnf_rec(FormulaId f, bool negated,
                                std::unordered_map<std::uint64_t, FormulaId>& memo) {
    const std::uint64_t key = (static_cast<std::uint64_t>(f) << 1) | (negated ? 1 : 0);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const FormulaNode n = nodes_[f];
    FormulaId out = kNoFormula;
    switch (n.op) {
        case Op::True: out = negated ? ff() : tt(); break;
        case Op::False: out = negated ? tt() : ff(); break;
        case Op::Atom: out = negated ? not_(f) : f; break;
        case Op::Not: out = nnf_rec(n.lhs, !negated, memo); break;
        case Op::And: {
            FormulaId a = nnf_rec(n.lhs, negated, memo);
            FormulaId b = nnf_rec(n.rhs, negated, memo);
            out = negated ? or_(a, b) : and_(a, b);
            break;
        }
        case Op::Or: {
            FormulaId a = nnf_rec(n.lhs, negated, memo);
            FormulaId b = nnf_rec(n.rhs, negated, memo);
            out = negated ? and_(a, b) : or_(a, b);
            break;
        }
        case Op::Implies: {
            // a -> b == !a || b
            FormulaId a = nnf_rec(n.lhs, !negated, memo);
            FormulaId b = nnf_rec(n.rhs, negated, memo);
            out = negated ? and_(a, b) : or_(a, b);
            break;
        }
        case Op::Next: out = next(nnf_rec(n.lhs, negated, memo)); break;
        case Op::Until: {
            FormulaId a = nnf_rec(n.lhs, negated, memo);
            FormulaId b = nnf_rec(n.rhs, negated, memo);
            out = negated ? release(a, b) : until(a, b);
            break;
        }
        case Op::Release: {
            FormulaId a = nnf_rec(n.lhs, negated, memo);
            FormulaId b = nnf_rec(n.rhs, negated, memo);
            out = negated ? until(a, b) : release(a, b);
            break;
        }
        case Op::Eventually: {
            // F f == true U f ; !F f == false R !f
            FormulaId body = nnf_rec(n.lhs, negated, memo);
            out = negated ? release(ff(), body) : until(tt(), body);
            break;
        }
        case Op::Always: {
            // G f == false R f ; !G f == true U !f
            FormulaId body = nnf_rec(n.lhs, negated, memo);
            out = negated ? until(tt(), body) : release(ff(), body);
            break;
        }
    }
    memo.emplace(key, out);
    return out;
}

namespace {
// Printer precedence levels; higher binds tighter.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecUntil = 4;
constexpr int kPrecUnary = 5;
}  // namespace

void FormulaStore::print_rec(FormulaId id, int parent_prec, std::string& out) const {
    const FormulaNode& n = nodes_[id];
    auto binary = [&](const char* sym, int prec, bool right_assoc) {
        const bool parens = prec < parent_prec;
        if (parens) out += '(';
        print_rec(n.lhs, right_assoc ? prec + 1 : prec, out);
        out += ' ';
        out += sym;
        out += ' ';
        print_rec(n.rhs, right_assoc ? prec : prec + 1, out);
        if (parens) out += ')';
    };
    switch (n.op) {
        case Op::True: out += "true"; break;
        case Op::False: out += "false"; break;
        case Op::Atom: out += atom_names_[n.atom]; break;
        case Op::Not:
            out += '!';
            print_rec(n.lhs, kPrecUnary, out);
            break;
        case Op::Next:
            out += "X ";
            print_rec(n.lhs, kPrecUnary, out);
            break;
        case Op::Eventually:
            out += "F ";
            print_rec(n.lhs, kPrecUnary, out);
            break;
        case Op::Always:
            out += "G ";
            print_rec(n.lhs, kPrecUnary, out);
            break;
        case Op::And: binary("&&", kPrecAnd, false); break;
        case Op::Or: binary("||", kPrecOr, false); break;
        case Op::Implies: binary("->", kPrecImplies, true); break;
        case Op::Until: binary("U", kPrecUntil, true); break;
        case Op::Release: binary("R", kPrecUntil, true); break;
    }
}

std::string FormulaStore::to_string(FormulaId id) const {
    std::string out;
    print_rec(id, 0, out);
    return out;
}

}  // namespace ltlnav::ltl
