#pragma once
#include <gmpxx.h>
#include <string>

namespace trapgraph {

// Arbitrary-precision nonnegative counter. Set counts reach 2^n, so no
// fixed-width type is safe; counts are never reduced modulo anything.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

} // namespace trapgraph
