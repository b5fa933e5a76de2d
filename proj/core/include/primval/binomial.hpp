/**
 * @file binomial.hpp
 * @brief The binomial basis binomial(X,k) = X(X-1)...(X-k+1)/k! for
 *        polynomials over Q, via the finite-difference recurrence
 *        a_n = P(n) - a_0 - a_1*C(n,1) - ... - a_{n-1}*C(n,n-1).
 *
 * A polynomial over Q is integer valued iff all its binomial coefficients
 * are integers, and then gcd P(Z) = gcd{a_0, ..., a_n}.
 */
#ifndef PRIMVAL_BINOMIAL_HPP
#define PRIMVAL_BINOMIAL_HPP

#include <vector>

#include <gmpxx.h>

#include "primval/poly.hpp"
#include "primval/zz.hpp"

namespace primval {

/// Coefficients relative to the basis binomial(X, k), ascending in k.
struct BinomialForm {
    std::vector<mpq_class> a;
};

inline mpz_class binom_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BinomialForm to_binomial(const ZRing& ring, const Poly<ZRing>& f) {
    BinomialForm b;
    long n = f.degree();
    if (n < 0) return b;
    b.a.resize(n + 1);
    for (long i = 0; i <= n; ++i) {
        mpq_class v = poly_eval(ring, f, mpq_class(i));
        for (long j = 0; j < i; ++j) v -= b.a[j] * binom_z(i, j);
        b.a[i] = v;
    }
    return b;
}

inline Poly<ZRing> from_binomial(const ZRing& ring, const BinomialForm& b) {
    Poly<ZRing> acc{};
    Poly<ZRing> falling = poly_constant(ring, mpq_class(1));  // X(X-1)...(X-k+1)
    mpz_class kfact = 1;
    for (std::size_t k = 0; k < b.a.size(); ++k) {
        if (k > 0) {
            Poly<ZRing> lin = poly_from_fracs(ring, {mpq_class(-(long)(k - 1)), mpq_class(1)});
            falling = poly_mul(ring, falling, lin);
            kfact *= k;
        }
        acc = poly_add(ring, acc,
                       poly_scale(ring, mpq_class(b.a[k] / kfact), falling));
    }
    return acc;
}

inline Poly<ZRing> binomial_poly(const ZRing& ring, unsigned k) {
    BinomialForm b;
    b.a.assign(k + 1, mpq_class(0));
    b.a[k] = 1;
    return from_binomial(ring, b);
}

}  // namespace primval

#endif
