#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fliptop {

using Int = mpz_class;
using Rat = mpq_class;

// q^e without intermediate canonicalization: num and den of a canonical mpq are
// coprime, so their powers are too.
Rat rat_pow(const Rat& q, unsigned long e);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// Accepts "p/q", a bare integer, or a plain decimal such as "0.25".
Rat parse_rational(const std::string& text);

std::string rat_str(const Rat& q);  // canonical form, "7/8" or "3"
double rat_d(const Rat& q);

// Deterministic decimal formatting for CSV cells (%.17g round-trips doubles).
std::string dec_str(double v);

}  // namespace fliptop
