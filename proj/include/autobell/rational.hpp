#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace autobell
{

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced rational num/den; throws ArgumentError on a zero denominator.
Rational make_rational(const Integer &num, const Integer &den = 1);

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

Integer factorial(unsigned n);

// Zero when k > n.
Integer binomial(unsigned n, unsigned k);

// Binomial with signed arguments: zero unless 0 <= k <= n.
Integer binomial_signed(long n, long k);

Rational pow(const Rational &base, unsigned exp);

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace autobell
