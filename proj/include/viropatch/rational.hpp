#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace viro {

// Exact scalar type for all coefficient and lifting computations.
// mpq_class keeps values canonical (lowest terms, positive denominator)
// through arithmetic; raw assignments go through make_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num/den" or "num". Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in: " + s);
    q.canonicalize();
    return q;
}

// Serializes exactly, as "num" for integers and "num/den" otherwise.
inline std::string rational_str(const Rational& q) {
    return q.get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Binomial with the convention C(k1, k2) = 0 for k1 < k2 or k2 < 0.
inline Integer binomial(long k1, long k2) {
    if (k2 < 0 || k1 < k2) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k1),
                 static_cast<unsigned long>(k2));
    return b;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace viro
