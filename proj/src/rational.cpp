#include "ehrhart/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ehrhart {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Parse an optionally signed decimal integer, rejecting anything else.
Integer parse_integer(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) throw std::invalid_argument("invalid rational: '" + s + "'");
    Integer v(body);
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        Integer n = parse_integer(s);
        return Rational(n, Integer(1));
    }
    Integer num = parse_integer(s.substr(0, slash));
    std::string den_part = s.substr(slash + 1);
    if (!all_digits(den_part)) throw std::invalid_argument("invalid rational: '" + s + "'");
    Integer den(den_part);
    if (den == 0) throw std::invalid_argument("invalid rational (zero denominator): '" + s + "'");
    // The (num, den) constructor canonicalizes; plain string assignment would not.
    return Rational(num, den);
}

std::string rational_to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Integer floor_int(const Rational& x) {
    const Integer num = numerator(x);
    const Integer den = denominator(x);  // > 0 in canonical form
    Integer q = num / den;               // truncates toward zero
    if (num % den != 0 && num < 0) --q;
    return q;
}

Integer ceil_int(const Rational& x) { return -floor_int(-x); }

std::pair<Integer, Rational> floor_frac(const Rational& x) {
    Integer f = floor_int(x);
    return {f, Rational(x - Rational(f, Integer(1)))};
}

std::pair<Integer, Rational> ceil_frac(const Rational& x) {
    Integer c = ceil_int(x);
    return {c, Rational(x - Rational(c, Integer(1)))};
}

Rational rational_lcm(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) return Rational(0);
    Integer na = abs(numerator(a)), nb = abs(numerator(b));
    Integer da = denominator(a), db = denominator(b);
    return Rational(lcm(na, nb), gcd(da, db));
}

Rational binomial(const Rational& x, int n) {
    Rational result(1);
    for (int i = 0; i < n; ++i) {
        result *= (x - i);
        result /= (i + 1);
    }
    return result;
}

}  // namespace ehrhart
