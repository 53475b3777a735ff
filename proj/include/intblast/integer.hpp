#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace intblast {

using Integer = boost::multiprecision::cpp_int;

inline Integer pow2(unsigned k) { return Integer(1) << k; }

/// 2^k - 1
inline Integer mask(unsigned k) { return pow2(k) - 1; }

inline std::string to_decimal(const Integer &v) { return v.str(); }

} // namespace intblast
