#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace arrzeta {

using Integer = mpz_class;
/// Always kept in canonical form: positive denominator, coprime parts.
using Rational = mpq_class;

using RVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

/// Accepts "p", "-p", "p/q" (whitespace around the parts is ignored).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Fractional part in [0, 1).
Rational frac(const Rational& q);
bool is_integer(const Rational& q);

Integer gcd(const ZVector& v);

}  // namespace arrzeta
