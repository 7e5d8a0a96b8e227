#pragma once

#include <gmpxx.h>

#include <string>

namespace toric {

// Exact scalars. Every quantity in the library is an Int or a Rat; floating
// point is never used.
using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational num/den with den > 0. Throws std::invalid_argument on den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Largest integer <= q.
Int rat_floor(const Rat& q);

/// Smallest integer >= q.
Int rat_ceil(const Rat& q);

bool is_integer(const Rat& q);

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
Rat parse_rat(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

std::string int_to_string(const Int& z);

}  // namespace toric
