#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bmm {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; only the two-argument constructor needs an
// explicit canonicalize(), which make_rational() does.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Exact "num/den" form; integers render without a denominator.
std::string to_string(const Rational& r);

// Bit length used for pivot selection (numerator plus denominator).
std::size_t bit_size(const Rational& r);

// Generalized binomial coefficient binom(top, k) for any integer top and
// k >= 0; binom(top, k) = top (top-1) ... (top-k+1) / k!.
Integer binomial(long top, long k);

}  // namespace bmm
