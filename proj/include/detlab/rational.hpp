/*
 * Exact rational arithmetic.
 *
 * Rat is a GMP-backed rational, always reduced to lowest terms with a
 * positive denominator (mpq canonical form). Int is the matching
 * arbitrary-precision integer.
 */
#ifndef DETLAB_RATIONAL_HPP
#define DETLAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "detlab/errors.hpp"

namespace detlab {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "num" when the denominator is 1, else "num/den".
inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline Int int_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace detlab

#endif
