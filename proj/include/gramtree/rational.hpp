#pragma once

#include <gmpxx.h>

#include <string>

namespace gramtree::algebra {

using Int = mpz_class;
using Rat = mpq_class;

Int binomial(long n, long k);       // 0 when k < 0 or k > n or n < 0
Int factorial(unsigned long n);

// Accepts "123", "-4", "+7/3". Result is reduced with positive denominator.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(|p|,q) = 1.
std::string rational_text(const Rat& r);

// True when r is an integer (denominator 1 after reduction).
bool is_integer(const Rat& r);

}  // namespace gramtree::algebra
