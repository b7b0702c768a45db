#pragma once

#include <string_view>
#include <vector>

#include "triwidth/mso/formula.hpp"

namespace triwidth::mso {

// Syntax only. Throws ParseError with line and column.
F parse_syntax(std::string_view text);
// Syntax plus sort checking against the signature; every free variable must be declared.
F parse_formula(std::string_view text, const Signature& sig, const std::vector<VarDecl>& free = {});
// Throws SortError naming the offending atom or binder.
void check_sorts(const F& f, const Signature& sig, const std::vector<VarDecl>& free);

Sort parse_sort(std::string_view text);

}  // namespace triwidth::mso
