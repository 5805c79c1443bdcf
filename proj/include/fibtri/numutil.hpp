#pragma once

#include <gmpxx.h>

#include <string>

namespace fibtri {

// Exact rational from a plain decimal string like "-0.068" or "12".
mpq_class mpq_from_decimal(const std::string& s);

// Exact integer from decimal or scientific notation with a non-negative
// mantissa-to-integer exponent, e.g. "8e51" or "121393".
mpz_class mpz_from_scientific(const std::string& s);

// Decimal rendering of an exact rational, rounded toward -infinity /
// +infinity to `digits` significant digits.
std::string decimal_lower(const mpq_class& q, int digits);
std::string decimal_upper(const mpq_class& q, int digits);

} // namespace fibtri
