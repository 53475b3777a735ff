#pragma once

#include "intblast/term.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace intblast {

/// Canonical SMT-LIB 2 printing: single spaces, no line breaks, binary
/// bit-vector literals, decimal integer literals, no `let` sharing.
void print_term(std::ostream &os, const Term &t);
std::string to_smtlib(const Term &t);

/// Returns `sym` unchanged if it is a simple symbol, otherwise `|sym|`.
std::string quote_symbol(std::string_view sym);

/// `#b` followed by exactly `width` binary digits.
std::string bv_literal(const Integer &value, unsigned width);

} // namespace intblast
