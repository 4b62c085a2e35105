#pragma once

#include <gmpxx.h>

#include <string>

namespace symhermite {

// Exact rational scalar. GMP keeps values canonical: lowest terms, positive
// denominator, zero stored as 0/1, so operator== is plain value equality.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

// Accepts "p" or "p/q" with optional leading '-' on p; q must be positive.
Scalar scalar_from_string(const std::string& text);

std::string scalar_to_string(const Scalar& s);

// C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace symhermite
