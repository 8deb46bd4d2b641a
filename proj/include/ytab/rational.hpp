#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ytab {

// Exact arbitrary-precision integers and rationals.  mpq_class keeps values
// canonical (lowest terms, positive denominator) as long as every value is
// canonicalized on construction, which rat() below guarantees.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Exact conversion of an integer-valued rational.
inline Int to_int(const Rat& r) {
    if (r.get_den() != 1)
        throw std::domain_error("to_int: not an integer: " + r.get_str());
    return r.get_num();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Rising factorial x(x+1)...(x+n-1); empty product is 1.
inline Rat pochhammer(const Rat& x, long n) {
    if (n < 0) throw std::domain_error("pochhammer: negative length");
    Rat p = 1;
    for (long i = 0; i < n; ++i) p *= x + i;
    return p;
}

inline Rat pow_rat(const Rat& x, long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("pow_rat: 0^negative");
        Rat inv = rat(Int(x.get_den()), Int(x.get_num()));
        return pow_rat(inv, -e);
    }
    Rat r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace ytab
