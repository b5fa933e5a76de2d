/**
 * @file zloc.hpp
 * @brief The localization of Z at a prime p: rationals whose denominator
 *        is coprime to p. A discrete valuation ring with the single prime
 *        p; fraction field Q. Everything reduces to p-adic valuations.
 */
#ifndef PRIMVAL_ZLOC_HPP
#define PRIMVAL_ZLOC_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "primval/intfactor.hpp"
#include "primval/ring.hpp"

namespace primval {

class ZlocRing {
public:
    using Elem = mpq_class;
    using Frac = mpq_class;
    static constexpr RingKind kind = RingKind::LocalizedIntegers;
    static constexpr bool units_finite = false;

    explicit ZlocRing(const mpz_class& p) : p_(p) {
        if (!int_is_prime(p) || p < 2)
            throw precondition_error("localization requires a positive prime");
    }

    const mpz_class& p() const { return p_; }
    bool spec_finite() const { return true; }
    std::vector<Elem> spec_primes() const { return {Elem(p_)}; }
    std::string name() const { return "zloc:" + p_.get_str(); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long n) const { return n; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_unit(const Elem& a) const { return a != 0 && vp(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }

    /// v_p of a nonzero rational (may be negative outside the ring).
    long vp(const Elem& a) const {
        return int_valuation(p_, a.get_num()) - int_valuation(p_, a.get_den());
    }

    /// Membership in Z_(p) itself (used to validate parsed input).
    bool in_ring(const Elem& a) const { return a == 0 || vp(a) >= 0; }

    bool divides(const Elem& d, const Elem& a) const {
        if (d == 0) return a == 0;
        if (a == 0) return true;
        return vp(a) >= vp(d);
    }
    Elem div_exact(const Elem& a, const Elem& d) const {
        if (!divides(d, a)) throw precondition_error("div_exact: not divisible in Z_(p)");
        return a / d;
    }

    Elem gcd(const Elem& a, const Elem& b) const {
        if (a == 0 && b == 0) return 0;
        if (a == 0) return normalize(b);
        if (b == 0) return normalize(a);
        return pow_p(std::min(vp(a), vp(b)));
    }
    XGcd<Elem> xgcd(const Elem& a, const Elem& b) const {
        Elem g = gcd(a, b);
        if (g == 0) return {0, 0, 0};
        if (a != 0 && (b == 0 || vp(a) <= vp(b))) return {g, g / a, 0};
        return {g, 0, g / b};
    }

    /// Canonical associate: p^(v_p(a)).
    Elem normalize(const Elem& a) const {
        if (a == 0) return 0;
        return pow_p(vp(a));
    }
    Elem unit_part(const Elem& a) const {
        if (a == 0) return 1;
        return a / pow_p(vp(a));
    }

    bool is_prime(const Elem& a) const { return a != 0 && vp(a) == 1; }

    Factored<Elem> factor(const Elem& a, const FactorBudget& = {}) const {
        if (a == 0) throw precondition_error("factor: zero input");
        Factored<Elem> f;
        long v = vp(a);
        f.unit = unit_part(a);
        if (v > 0) f.factors.emplace_back(Elem(p_), (unsigned)v);
        return f;
    }

    long valuation(const Elem& prime, const Elem& a) const {
        if (a == 0) throw precondition_error("valuation of zero");
        long vprime = vp(prime);
        if (vprime < 1) throw precondition_error("valuation at a unit");
        return vp(a) / vprime;
    }

    /// Residues mod m correspond to Z/p^k, k = v_p(m); the canonical
    /// representative is the integer num * den^-1 mod p^k in [0, p^k).
    Elem mod(const Elem& a, const Elem& m) const {
        long k = vp(m);
        if (k <= 0) return 0;
        mpz_class pk = pow_p_z(k);
        mpz_class deninv;
        if (mpz_invert(deninv.get_mpz_t(), a.get_den().get_mpz_t(), pk.get_mpz_t()) == 0)
            throw precondition_error("element outside Z_(p)");
        mpz_class r = a.get_num() * deninv % pk;
        if (r < 0) r += pk;
        return Elem(r);
    }

    mpz_class residue_count(const Elem& m) const { return pow_p_z(vp(m)); }
    Elem residue_at(const Elem& m, const mpz_class& i) const {
        (void)m;
        return Elem(i);
    }

    /// The integers in zig-zag order; a deterministic infinite sample of
    /// the ring, sufficient for candidate scans.
    Elem enumerate_at(const mpz_class& i) const {
        if (i == 0) return 0;
        mpz_class h = (i + 1) / 2;
        return mpz_odd_p(i.get_mpz_t()) ? Elem(h) : Elem(-h);
    }

    std::vector<Elem> primes_upto(long) const { return spec_primes(); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    Frac frac(const Elem& a) const { return a; }
    Frac fadd(const Frac& x, const Frac& y) const { return x + y; }
    Frac fsub(const Frac& x, const Frac& y) const { return x - y; }
    Frac fmul(const Frac& x, const Frac& y) const { return x * y; }
    Frac fneg(const Frac& x) const { return -x; }
    Frac fdiv(const Frac& x, const Frac& y) const { return x / y; }
    bool fis_zero(const Frac& x) const { return x == 0; }
    bool fequal(const Frac& x, const Frac& y) const { return x == y; }
    bool fin_ring(const Frac& x) const { return in_ring(x); }
    Elem fto_ring(const Frac& x) const {
        if (!in_ring(x))
            throw precondition_error("value is not in Z_(" + p_.get_str() + "): " + x.get_str());
        return x;
    }
    /// num/den with respect to the ring: den is the p-power clearing the
    /// negative part of the valuation.
    std::pair<Elem, Elem> fnum_den(const Frac& x) const {
        if (x == 0) return {Elem(0), Elem(1)};
        long v = vp(x);
        if (v >= 0) return {x, Elem(1)};
        Elem den = pow_p(-v);
        return {x * den, den};
    }
    std::string fto_string(const Frac& x) const { return x.get_str(); }

private:
    Elem pow_p(long e) const { return Elem(pow_p_z(e)); }
    mpz_class pow_p_z(long e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), (unsigned long)e);
        return r;
    }

    mpz_class p_;
};

}  // namespace primval

#endif
