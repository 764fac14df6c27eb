#ifndef STARQ_RATIONAL_HPP
#define STARQ_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace starq {

// Exact rational scalars. All arithmetic in the engine is over Q; there is
// no floating point anywhere.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical form "p/q" (or "p" when q = 1), sign on the numerator.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

inline Rational factorial(unsigned n) {
    Rational r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= static_cast<long>(k);
    return r;
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= static_cast<long>(n - i);
        r /= static_cast<long>(i + 1);
    }
    return r;
}

}  // namespace starq

#endif
