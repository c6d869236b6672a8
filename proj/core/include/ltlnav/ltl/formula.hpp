// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.
//
// Interned LTL abstract syntax. Structurally identical formulas share one
// FormulaId, so equality is an integer compare and subformula sets can be
// kept as sorted id vectors. Child ids are always smaller than the parent
// id, which makes id order a valid bottom-up evaluation order.

#ifndef LTLNAV_LTL_FORMULA_HPP
#define LTLNAV_LTL_FORMULA_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace ltlnav::ltl {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = static_cast<FormulaId>(-1);

enum class Op : std::uint8_t {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Next,
    Until,
    Release,
    Eventually,  // surface sugar; removed by to_nnf
    Always,      // surface sugar; removed by to_nnf
};

const char* op_name(Op op) noexcept;

struct FormulaNode {
    Op op{};
    std::uint32_t atom = 0;        // atom index for Op::Atom
    FormulaId lhs = kNoFormula;    // single child lives in lhs
    FormulaId rhs = kNoFormula;

    bool operator==(const FormulaNode& o) const noexcept {
        return op == o.op && atom == o.atom && lhs == o.lhs && rhs == o.rhs;
    }
};

class FormulaStore {
public:
    FormulaStore();

    FormulaId tt();
    FormulaId ff();
    FormulaId atom(const std::string& name);
    FormulaId not_(FormulaId f);
    FormulaId and_(FormulaId a, FormulaId b);
    FormulaId or_(FormulaId a, FormulaId b);
    FormulaId implies(FormulaId a, FormulaId b);
    FormulaId next(FormulaId f);
    FormulaId until(FormulaId a, FormulaId b);
    FormulaId release(FormulaId a, FormulaId b);
    FormulaId eventually(FormulaId f);
    FormulaId always(FormulaId f);

    const FormulaNode& node(FormulaId id) const { return nodes_[id]; }
    std::size_t size() const noexcept { return nodes_.size(); }

    // Atom name table. Indices are assigned in first-use order.
    std::uint32_t atom_index(const std::string& name);
    const std::string& atom_name(std::uint32_t index) const { return atom_names_[index]; }
    std::size_t atom_count() const noexcept { return atom_names_.size(); }

    // Negation normal form: Not only directly above Atom; Implies expanded;
    // Eventually/Always rewritten to Until/Release over true/false.
    FormulaId to_nnf(FormulaId f);

    // Precedence-aware printer; parse(to_string(f)) == f.
    std::string to_string(FormulaId id) const;

    // True if the node is an atom or a negated atom (or a constant).
    bool is_literal(FormulaId id) const;

private:
    struct NodeHash {
        std::size_t operator()(const FormulaNode& n) const noexcept;
    };

    FormulaId intern(FormulaNode n);
    FormulaId nnf_rec(FormulaId f, bool negated,
                      std::unordered_map<std::uint64_t, FormulaId>& memo);
    void print_rec(FormulaId id, int parent_prec, std::string& out) const;

    std::vector<FormulaNode> nodes_;
    std::unordered_map<FormulaNode, FormulaId, NodeHash> intern_;
    std::vector<std::string> atom_names_;
    std::unordered_map<std::string, std::uint32_t> atom_index_;
};

}  // namespace ltlnav::ltl

#endif  // LTLNAV_LTL_FORMULA_HPP
