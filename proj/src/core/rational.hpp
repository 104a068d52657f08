#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace macver {

// Exact rationals. gmpxx keeps every arithmetic result canonical (reduced,
// positive denominator); values built from a numerator/denominator pair go
// through make_rational which canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q". Throws UsageError on anything else or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Largest integer <= r and smallest integer >= r.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Throws InvariantError when the value does not fit.
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& r);
bool fits_int64(const Integer& z);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace macver
