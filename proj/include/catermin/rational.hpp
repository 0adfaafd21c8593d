#pragma once

#include <gmpxx.h>

#include <string>

#include "catermin/errors.hpp"

namespace catermin {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, positive denominator), which is what the exact
// equality tests rely on.
using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or a plain integer. Floats are deliberately rejected.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

} // namespace catermin
