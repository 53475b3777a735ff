#pragma once

#include "intblast/term.hpp"

#include <map>
#include <string>

namespace intblast {

/// True for operators that survive preprocessing: the arithmetic operators,
/// bvnot/bvand/bvshl/bvlshr, the structural operators, unsigned and signed
/// less-than(-or-equal), equality, ite and the Boolean connectives.
bool is_core_kind(Kind kind);

/// Rewrites every derived bit-vector operator into the core set, bottom-up
/// and in one pass. The result is equivalent to `t` bit for bit.
Term eliminate_derived_ops(const Term &t);

/// Occurrences of each operator among the distinct subterms of `t`, keyed by
/// SMT-LIB symbol. Leaves are not counted.
std::map<std::string, std::size_t> count_core_ops(const Term &t);

} // namespace intblast
