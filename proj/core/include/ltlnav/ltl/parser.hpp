// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#ifndef LTLNAV_LTL_PARSER_HPP
#define LTLNAV_LTL_PARSER_HPP

#include <set>
#include <string>

#include "ltlnav/ltl/formula.hpp"

namespace ltlnav::ltl {

// Parse LTL text over the declared alphabet.
//
// Grammar (loosest to tightest): `->` (right) < `||` < `&&` < `U`,`R`
// (right) < unary `!`, `X`, `F`/`<>`, `G`/`[]`. Parentheses override.
// `true` and `false` are constants; every other identifier must be in
// `alphabet`, otherwise UnknownProposition is thrown. Malformed input
// throws SyntaxError with the 1-based token index.
FormulaId parse(FormulaStore& store, const std::string& text,
                const std::set<std::string>& alphabet);

}  // namespace ltlnav::ltl

#endif  // LTLNAV_LTL_PARSER_HPP
