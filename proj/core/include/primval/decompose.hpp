/**
 * @file decompose.hpp
 * @brief Integral-valuedness, the gcd of a polynomial's value set, and the
 *        canonical decomposition Q = (A/B) P with P totally primitive.
 *
 * Over Z both tests go through the binomial basis. Over the other
 * backends, P = Q/B is integrally valued iff each prime power pi^e
 * dividing B divides Q over a full residue system (checked modulo
 * pi^(2e+1), the exponent carrying the nu-margin), and the value-set gcd
 * is assembled prime by prime from minimal valuations over residue
 * systems.
 */
#ifndef PRIMVAL_DECOMPOSE_HPP
#define PRIMVAL_DECOMPOSE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "primval/binomial.hpp"
#include "primval/poly.hpp"
#include "primval/ring.hpp"

namespace primval {

/// nu_p for P = Q/B: congruence of arguments mod p^nu forces congruence of
/// values mod p. Returns v_p(B) + 1.
template <PID R>
long nu_exponent(const R& ring, const Poly<R>& f, const typename R::Elem& p) {
    return ring.valuation(p, poly_denominator(ring, f)) + 1;
}

namespace detail {

/// First enumeration point where f evaluates to something nonzero.
template <PID R>
typename R::Elem first_nonvanishing_point(const R& ring, const Poly<R>& f) {
    for (mpz_class i = 0;; ++i) {
        typename R::Elem m = ring.enumerate_at(i);
        if (!ring.fis_zero(poly_eval_elem(ring, f, m))) return m;
        if (i > f.degree() + 2)
            throw precondition_error("polynomial vanishes on more points than its degree");
    }
}

/// Minimal valuation v_pi(Q(m)) over all m in R, for Q with coefficients
/// in R; `cap` must be an attained valuation (so the minimum is <= cap).
template <PID R>
long min_valuation_over_ring(const R& ring, const Poly<R>& q, const typename R::Elem& pi,
                             long cap) {
    using E = typename R::Elem;
    E modulus = ring.one();
    for (long i = 0; i < cap + 1; ++i) modulus = ring.mul(modulus, pi);
    mpz_class count = ring.residue_count(modulus);
    long best = cap;
    for (mpz_class i = 0; i < count && best > 0; ++i) {
        typename R::Frac v = poly_eval_elem(ring, q, ring.residue_at(modulus, i));
        if (ring.fis_zero(v)) continue;  // the whole class sits above the cap
        long w = ring.valuation(pi, ring.fto_ring(v));
        best = std::min(best, w);
    }
    return best;
}

}  // namespace detail

template <PID R>
bool is_integrally_valued(const R& ring, const Poly<R>& f) {
    if (f.is_zero()) return true;
    if constexpr (R::kind == RingKind::Integers) {
        for (const auto& a : to_binomial(ring, f).a)
            if (a.get_den() != 1) return false;
        return true;
    } else {
        typename R::Elem b = poly_denominator(ring, f);
        if (ring.is_unit(b)) return true;
        Poly<R> q = poly_scale(ring, ring.frac(b), f);
        for (const auto& [pi, e] : ring.factor(b, FactorBudget{}).factors) {
            // test pi^e | Q over residues mod pi^(2e+1)
            typename R::Elem modulus = ring.one();
            for (unsigned i = 0; i < 2 * e + 1; ++i) modulus = ring.mul(modulus, pi);
            typename R::Elem pe = ring.one();
            for (unsigned i = 0; i < e; ++i) pe = ring.mul(pe, pi);
            mpz_class count = ring.residue_count(modulus);
            for (mpz_class i = 0; i < count; ++i) {
                typename R::Frac v = poly_eval_elem(ring, q, ring.residue_at(modulus, i));
                if (ring.fis_zero(v)) continue;
                if (!ring.divides(pe, ring.fto_ring(v))) return false;
            }
        }
        return true;
    }
}

/// Normalized generator of the ideal generated by the value set f(R).
/// Requires f integrally valued.
template <PID R>
typename R::Elem gcd_values(const R& ring, const Poly<R>& f,
                            const FactorBudget& budget = {}) {
    if (!is_integrally_valued(ring, f))
        throw precondition_error("gcd_values: polynomial is not integrally valued");
    if (f.is_zero()) return ring.zero();
    if constexpr (R::kind == RingKind::Integers) {
        mpz_class g = 0;
        for (const auto& a : to_binomial(ring, f).a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_num().get_mpz_t());
        return g;
    } else {
        using E = typename R::Elem;
        E b = poly_denominator(ring, f);
        Poly<R> q = poly_scale(ring, ring.frac(b), f);
        E m0 = detail::first_nonvanishing_point(ring, f);
        E v0 = ring.fto_ring(poly_eval_elem(ring, f, m0));
        E gamma = ring.one();
        for (const auto& [pi, e0] : ring.factor(v0, budget).factors) {
            (void)e0;
            long e = ring.valuation(pi, b);
            long cap = ring.valuation(pi, ring.fto_ring(poly_eval_elem(ring, q, m0)));
            long minv = detail::min_valuation_over_ring(ring, q, pi, cap);
            for (long i = 0; i < minv - e; ++i) gamma = ring.mul(gamma, pi);
        }
        return ring.normalize(gamma);
    }
}

/// Q = (A/B) P with A, B coprime, P totally primitive, everything
/// canonical modulo units (over Z: B > 0 and P has positive leading
/// coefficient at the numerator level).
template <PID R>
struct ReprDecomposition {
    typename R::Elem a, b;
    Poly<R> p;
};

template <PID R>
ReprDecomposition<R> repr_decompose(const R& ring, const Poly<R>& q,
                                    const FactorBudget& budget = {}) {
    using E = typename R::Elem;
    if (q.is_zero()) throw precondition_error("repr_decompose: zero polynomial");
    E denom = poly_denominator(ring, q);
    Poly<R> r0 = poly_scale(ring, ring.frac(denom), q);  // r0 = denom * q over R
    E gamma = gcd_values(ring, r0, budget);
    Poly<R> p = poly_scale(ring, ring.fdiv(ring.frac(ring.one()), ring.frac(gamma)), r0);
    // A/B = gamma/denom in lowest terms
    E g = ring.gcd(gamma, denom);
    E a = ring.div_exact(gamma, g);
    E b = ring.div_exact(denom, g);
    // push all unit freedom into A: normalize B and P's leading coefficient
    E ub = ring.unit_part(b);
    b = ring.normalize(b);
    a = ring.div_exact(a, ub);
    E lead_num = ring.fnum_den(p.c.back()).first;
    E up = ring.unit_part(lead_num);
    if (!ring.equal(up, ring.one())) {
        p = poly_scale(ring, ring.fdiv(ring.frac(ring.one()), ring.frac(up)), p);
        a = ring.mul(a, up);
    }
    return {a, b, p};
}

}  // namespace primval

#endif
