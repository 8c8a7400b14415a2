#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sumprod {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Builds num/den in lowest terms. Throws DomainError on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p" or "p/q" (optional leading '-'). The result is canonical.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

bool is_integer(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
int sign(const Rational& r);
int sign(const Integer& n);

Integer pow(const Integer& base, unsigned long exp);
/// Integer powers with negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, long exp);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

/// Exact k-th root when one exists in the integers (negative n needs odd k).
std::optional<Integer> exact_root(const Integer& n, unsigned long k);
std::optional<Rational> exact_root(const Rational& r, unsigned long k);

Integer gcd(const Integer& a, const Integer& b);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace sumprod
