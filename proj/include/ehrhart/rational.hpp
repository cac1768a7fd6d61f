#ifndef EHRHART_RATIONAL_HPP
#define EHRHART_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <utility>

namespace ehrhart {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parse "p", "p/q" (optional sign, arbitrary precision). The result is always
// canonical: gcd reduced, sign carried by the numerator, zero is 0/1.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string rational_to_string(const Rational& x);

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline Rational to_rational(const Integer& n) { return Rational(n, Integer(1)); }

// floor(x) and the fractional part {x} = x - floor(x) in [0, 1).
std::pair<Integer, Rational> floor_frac(const Rational& x);

// ceil(x) and the upper fractional part <x> = x - ceil(x) in (-1, 0].
std::pair<Integer, Rational> ceil_frac(const Rational& x);

Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);

// Least common multiple in the rational sense: the smallest positive rational
// that is an integer multiple of both arguments. Computed as
// lcm(numerators) / gcd(denominators). lcm(0, x) = lcm(x, 0) = 0.
Rational rational_lcm(const Rational& a, const Rational& b);

// Generalized binomial coefficient C(x, n) = x(x-1)...(x-n+1) / n! for any
// rational x and integer n >= 0. C(x, 0) = 1.
Rational binomial(const Rational& x, int n);

}  // namespace ehrhart

#endif
