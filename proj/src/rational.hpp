#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace qa {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, positive denominator), which is exactly the
// BigRational contract every module above relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline const Integer num(const Rational& q) { return q.get_num(); }
inline const Integer den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw input_error("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& n, const Integer& d) {
    if (d == 0) throw input_error("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational abs(const Rational& q) { return ::abs(q); }

inline Rational pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    return r;
}

inline Integer pow(const Integer& z, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

// floor(q) as an integer
inline Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p/q", or just "p" for integers
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p", "-p" or "p/q". Throws input_error on anything else.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || den(q) == 0)
        throw input_error("malformed rational: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace qa
