#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invol {

using Integer = mpz_class;

// Elements of the coefficient field. gmpxx keeps results of arithmetic in
// lowest terms with a positive denominator.
using Rat = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Parses "p" or "p/q" (optional leading '-'); throws Error(InvalidArgument).
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace invol
