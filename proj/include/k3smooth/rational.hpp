#pragma once

#include <gmpxx.h>

#include <string>

#include "k3smooth/errors.hpp"

namespace k3smooth {

// Exact arithmetic only. Rat is always kept in lowest terms with a
// positive denominator (mpq_class canonicalizes on arithmetic; raw
// string construction must call canonicalize).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Number of degree-d monomials in nvars variables.
inline Int monomial_count(long d, int nvars) {
    if (d < 0) return Int(0);
    return binomial(d + nvars - 1, nvars - 1);
}

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw InternalError("integer out of long range");
    return z.get_si();
}

}  // namespace k3smooth
