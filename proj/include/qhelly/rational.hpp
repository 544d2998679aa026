#pragma once

#include <gmpxx.h>

#include <string>

namespace qhelly {

// Exact rational scalar. GMP keeps every value canonical (lowest terms,
// positive denominator) through all arithmetic, so comparisons are decisions.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", or a plain decimal like "-0.25" (converted exactly).
Rational parse_rational(const std::string& text);

// "p/q", or just "p" for integers.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

bool is_integer(const Rational& q);

Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);

}  // namespace qhelly
