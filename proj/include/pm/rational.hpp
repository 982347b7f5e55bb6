#ifndef PM_RATIONAL_HPP
#define PM_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pm {

// Exact arithmetic throughout. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// the coefficient types need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a/b" or "a". Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q(Integer(s));
            return q;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Falling factorial (x)_k = x(x-1)...(x-k+1).
inline Integer falling_factorial(const Integer& x, unsigned long k) {
    Integer r = 1, v = x;
    for (unsigned long i = 0; i < k; ++i) { r *= v; v -= 1; }
    return r;
}

} // namespace pm

#endif
