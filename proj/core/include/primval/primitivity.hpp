/**
 * @file primitivity.hpp
 * @brief Total primitivity and the obstruction set P(P, A): the primes
 *        modulo which P vanishes identically on an arithmetic progression.
 *
 * For P over Z[X] the set is exactly the union of three classes:
 *   P1: primes dividing every coefficient,
 *   P2: primes dividing gcd{P(a), b},
 *   P3: primes p <= deg P dividing P(0) whose reduction of P modulo
 *       X^p - X is null over Z/p (exponent e >= 1 maps to
 *       ((e-1) mod (p-1)) + 1).
 * For integrally valued P outside Z[X] the obstructions come from the
 * value-set gcd (trivial progression) or from the containment
 * P(P,A) <= P(Q,A) for the denominator-cleared Q, with per-prime
 * verification over a full residue system.
 */
#ifndef PRIMVAL_PRIMITIVITY_HPP
#define PRIMVAL_PRIMITIVITY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "primval/decompose.hpp"
#include "primval/fpt.hpp"
#include "primval/poly.hpp"
#include "primval/zz.hpp"

namespace primval {

/// The set {a + k b | k in N}, b != 0. Trivial when b is a unit.
template <PID R>
struct ArithProgression {
    typename R::Elem a, b;
};

template <PID R>
ArithProgression<R> trivial_progression(const R& ring) {
    return {ring.zero(), ring.one()};
}

template <PID R>
bool is_trivial(const R& ring, const ArithProgression<R>& prog) {
    return ring.is_unit(prog.b);
}

enum class ObstructionClass { P1, P2, P3, BinomialGcd };

inline std::string to_string(ObstructionClass c) {
    switch (c) {
        case ObstructionClass::P1: return "P1";
        case ObstructionClass::P2: return "P2";
        case ObstructionClass::P3: return "P3";
        default: return "binomial-gcd";
    }
}

template <PID R>
struct PrimitivityReport {
    // sorted by prime; a prime may carry several class tags
    std::vector<std::pair<typename R::Elem, std::vector<ObstructionClass>>> obstructions;
    bool totally_primitive = false;
    typename R::Elem gamma;  // gcd{P(a), b} of the supplied progression
};

/// Reduction of an integer polynomial modulo X^p - X over Z/p: the map
/// deciding whether P vanishes identically on Z modulo p.
inline FpPoly reduce_mod_xp_minus_x(const ZRing& ring, const Poly<ZRing>& f, std::uint32_t p) {
    std::vector<long> acc(p, 0);
    for (std::size_t e = 0; e < f.c.size(); ++e) {
        long r = (long)mpz_fdiv_ui(ring.fto_ring(f.c[e]).get_mpz_t(), p);
        std::size_t slot = e == 0 ? 0 : ((e - 1) % (p - 1)) + 1;
        acc[slot] = (acc[slot] + r) % (long)p;
    }
    return fp_make(p, acc);
}

/// True iff f is integrally valued; requires it (throws otherwise).
template <PID R>
void require_integrally_valued(const R& ring, const Poly<R>& f) {
    if (!is_integrally_valued(ring, f))
        throw precondition_error("polynomial is not integrally valued");
}

/// Totally primitive: the gcd of the whole value set is a unit.
template <PID R>
bool is_totally_primitive(const R& ring, const Poly<R>& f,
                          const FactorBudget& budget = {}) {
    require_integrally_valued(ring, f);
    return ring.is_unit(gcd_values(ring, f, budget));
}

namespace detail {

template <PID R>
void add_obstruction(std::vector<std::pair<typename R::Elem, std::vector<ObstructionClass>>>& out,
                     const R& ring, const typename R::Elem& prime, ObstructionClass cls) {
    for (auto& [p, tags] : out) {
        if (ring.equal(p, prime)) {
            if (std::find(tags.begin(), tags.end(), cls) == tags.end()) tags.push_back(cls);
            return;
        }
    }
    out.push_back({prime, {cls}});
}

template <PID R>
void sort_obstructions(
    std::vector<std::pair<typename R::Elem, std::vector<ObstructionClass>>>& out, const R& ring) {
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return ring.less(x.first, y.first); });
}

}  // namespace detail

/// The three-class criterion; requires integer coefficients.
inline PrimitivityReport<ZRing> obstruction_set(const ZRing& ring, const Poly<ZRing>& f,
                                                const ArithProgression<ZRing>& prog,
                                                const FactorBudget& budget = {}) {
    if (f.is_zero()) throw precondition_error("obstruction_set: zero polynomial");
    if (!poly_has_ring_coeffs(ring, f))
        throw precondition_error("obstruction_set: coefficients must be integers");
    PrimitivityReport<ZRing> rep;
    std::vector<mpz_class> coeffs = poly_ring_coeffs(ring, f);
    // P1: primes dividing every coefficient
    mpz_class content = 0;
    for (const auto& c : coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (const auto& [p, e] : ring.factor(content, budget).factors) {
            (void)e;
            detail::add_obstruction(rep.obstructions, ring, p, ObstructionClass::P1);
        }
    // P2: primes dividing gcd{P(a), b}
    mpz_class pa = ring.fto_ring(poly_eval_elem(ring, f, prog.a));
    mpz_class g2 = ring.gcd(pa, prog.b);
    rep.gamma = g2;
    if (g2 > 1)
        for (const auto& [p, e] : ring.factor(g2, budget).factors) {
            (void)e;
            detail::add_obstruction(rep.obstructions, ring, p, ObstructionClass::P2);
        }
    // P3: p <= deg P dividing P(0), reduction modulo X^p - X null over Z/p.
    // When P(0) = 0 every p <= deg P is a candidate.
    mpz_class p0 = ring.fto_ring(poly_eval_elem(ring, f, mpz_class(0)));
    long n = f.degree();
    for (const mpz_class& p : int_primes_upto(n)) {
        if (p0 != 0 && !ring.divides(p, p0)) continue;
        if (reduce_mod_xp_minus_x(ring, f, (std::uint32_t)p.get_ui()).is_zero())
            detail::add_obstruction(rep.obstructions, ring, p, ObstructionClass::P3);
    }
    detail::sort_obstructions(rep.obstructions, ring);
    rep.totally_primitive = rep.obstructions.empty();
    return rep;
}

/**
 * Obstruction report for any integrally valued polynomial. Over Z[X] this
 * is the exact three-class criterion; for P = Q/B outside Z[X] with a
 * trivial progression it is the value-set gcd, and with a nontrivial
 * progression the candidates P(Q, A) are verified prime by prime over a
 * full residue system modulo p^nu_p.
 */
template <PID R>
PrimitivityReport<R> primitivity_report(const R& ring, const Poly<R>& f,
                                        const ArithProgression<R>& prog,
                                        const FactorBudget& budget = {}) {
    if (f.is_zero()) throw precondition_error("primitivity report of the zero polynomial");
    if constexpr (R::kind == RingKind::Integers) {
        if (poly_has_ring_coeffs(ring, f)) return obstruction_set(ring, f, prog, budget);
    }
    require_integrally_valued(ring, f);
    PrimitivityReport<R> rep;
    typename R::Elem pa = ring.fto_ring(poly_eval_elem(ring, f, prog.a));
    rep.gamma = ring.normalize(ring.gcd(pa, prog.b));
    if (is_trivial(ring, prog)) {
        typename R::Elem g = gcd_values(ring, f, budget);
        if (!ring.is_unit(g))
            for (const auto& [p, e] : ring.factor(g, budget).factors) {
                (void)e;
                detail::add_obstruction(rep.obstructions, ring, p, ObstructionClass::BinomialGcd);
            }
        detail::sort_obstructions(rep.obstructions, ring);
        rep.totally_primitive = rep.obstructions.empty();
        return rep;
    }
    if constexpr (R::kind != RingKind::Integers) {
        throw precondition_error("nontrivial progressions are supported over Z only");
    } else {
        // candidates from the cleared polynomial, each verified directly
        mpz_class b = poly_denominator(ring, f);
        Poly<ZRing> q = poly_scale(ring, ring.frac(b), f);
        PrimitivityReport<ZRing> cand = obstruction_set(ring, q, prog, budget);
        for (const auto& [p, tags] : cand.obstructions) {
            long nu = nu_exponent(ring, f, p);
            mpz_class pnu;
            mpz_pow_ui(pnu.get_mpz_t(), p.get_mpz_t(), (unsigned long)nu);
            bool vanishes = true;
            for (mpz_class k = 0; k < pnu && vanishes; ++k) {
                mpq_class v = poly_eval_elem(ring, f, mpz_class(prog.a + k * prog.b));
                if (v == 0) continue;
                if (int_valuation(p, ring.fto_ring(v)) < 1) vanishes = false;
            }
            if (vanishes)
                for (ObstructionClass c : tags)
                    detail::add_obstruction(rep.obstructions, ring, p, c);
        }
        detail::sort_obstructions(rep.obstructions, ring);
        rep.totally_primitive = rep.obstructions.empty();
        return rep;
    }
}

/// gamma = gcd{P(a), b} and the obstruction report of (1/gamma) P(a + bX);
/// when gamma = 1 and the report is empty the composed polynomial is
/// totally primitive and the coprime-stream machinery applies inside the
/// progression.
struct ComposedObstructions {
    mpz_class gamma;
    Poly<ZRing> composed;  // (1/gamma) * P(a + bX)
    PrimitivityReport<ZRing> report;
};

inline ComposedObstructions composed_obstructions(const ZRing& ring, const Poly<ZRing>& f,
                                                  const ArithProgression<ZRing>& prog,
                                                  const FactorBudget& budget = {}) {
    if (!is_totally_primitive(ring, f, budget))
        throw precondition_error("composed_obstructions: polynomial is not totally primitive");
    mpz_class pa = ring.fto_ring(poly_eval_elem(ring, f, prog.a));
    mpz_class gamma = ring.normalize(ring.gcd(pa, prog.b));
    Poly<ZRing> comp = poly_compose_affine(ring, f, prog.a, prog.b);
    if (gamma != 0 && gamma != 1) comp = poly_scale(ring, mpq_class(mpq_class(1) / gamma), comp);
    ComposedObstructions out{gamma, comp,
                             primitivity_report(ring, comp, trivial_progression(ring), budget)};
    return out;
}

}  // namespace primval

#endif
