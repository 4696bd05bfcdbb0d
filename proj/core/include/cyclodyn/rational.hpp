#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclodyn {

using Integer = mpz_class;
// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation; values built from raw parts must go
// through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Parses "p" or "p/q" (optional sign, decimal digits only).
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

bool is_prime(const Integer& p);

// Exponent of p in q. Zero has infinite valuation, reported as nullopt.
// Throws InvalidPlace unless p is prime.
std::optional<long> padic_val(const Rational& q, const Integer& p);

// |q|_p = p^(-v_p(q)); zero maps to zero.
Rational padic_abs(const Rational& q, const Integer& p);

// floor(log2(q)) for q > 0, computed exactly.
long floor_log2(const Rational& q);

// Exact r with r^k = q, if one exists in Q (negative q only for odd k).
std::optional<Rational> rational_root(const Rational& q, unsigned long k);

Rational pow(const Rational& q, long e);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace cyclodyn
