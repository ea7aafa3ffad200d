#pragma once

#include <gmpxx.h>
#include <string>

namespace hyperred {

// Exact rational numbers. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(); every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational pow_rat(const Rational& base, long e);

template <typename R>
R rational_cast(const Rational& q) {
    return R(q.get_num().get_d()) / R(q.get_den().get_d());
}

template <>
inline double rational_cast<double>(const Rational& q) {
    return q.get_d();
}

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

} // namespace hyperred
