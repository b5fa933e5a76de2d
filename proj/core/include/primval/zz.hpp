/**
 * @file zz.hpp
 * @brief The integer backend: R = Z with fraction field Q.
 *
 * Elements are GMP integers, fractions are GMP rationals kept canonical.
 * Primes are normalized positive; the unit group is {1, -1}.
 */
#ifndef PRIMVAL_ZZ_HPP
#define PRIMVAL_ZZ_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "primval/intfactor.hpp"
#include "primval/ring.hpp"

namespace primval {

class ZRing {
public:
    using Elem = mpz_class;
    using Frac = mpq_class;
    static constexpr RingKind kind = RingKind::Integers;
    static constexpr bool units_finite = true;

    bool spec_finite() const { return false; }
    std::string name() const { return "z"; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long n) const { return n; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }

    bool divides(const Elem& d, const Elem& a) const {
        if (d == 0) return a == 0;
        return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t());
    }
    Elem div_exact(const Elem& a, const Elem& d) const {
        Elem q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        return q;
    }

    Elem gcd(const Elem& a, const Elem& b) const {
        Elem g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    XGcd<Elem> xgcd(const Elem& a, const Elem& b) const {
        XGcd<Elem> r;
        mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        return r;
    }

    Elem normalize(const Elem& a) const { return abs(a); }
    Elem unit_part(const Elem& a) const { return a < 0 ? Elem(-1) : Elem(1); }

    bool is_prime(const Elem& a) const { return int_is_prime(a); }

    Factored<Elem> factor(const Elem& a, const FactorBudget& budget = {}) const {
        Factored<Elem> f;
        f.unit = unit_part(a);
        for (auto& [p, e] : int_factor(a, budget)) f.factors.emplace_back(p, e);
        return f;
    }

    long valuation(const Elem& p, const Elem& a) const { return int_valuation(p, a); }

    /// Canonical residue in [0, |m|).
    Elem mod(const Elem& a, const Elem& m) const {
        Elem r, mm = abs(m);
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
        return r;
    }

    mpz_class residue_count(const Elem& m) const { return abs(m); }
    Elem residue_at(const Elem& m, const mpz_class& i) const {
        (void)m;
        return i;
    }

    /// 0, 1, -1, 2, -2, ...
    Elem enumerate_at(const mpz_class& i) const {
        if (i == 0) return 0;
        mpz_class h = (i + 1) / 2;
        return mpz_odd_p(i.get_mpz_t()) ? h : -h;
    }

    std::vector<Elem> primes_upto(long bound) const { return int_primes_upto(bound); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    Frac frac(const Elem& a) const { return mpq_class(a); }
    Frac fadd(const Frac& x, const Frac& y) const { return x + y; }
    Frac fsub(const Frac& x, const Frac& y) const { return x - y; }
    Frac fmul(const Frac& x, const Frac& y) const { return x * y; }
    Frac fneg(const Frac& x) const { return -x; }
    Frac fdiv(const Frac& x, const Frac& y) const { return x / y; }
    bool fis_zero(const Frac& x) const { return x == 0; }
    bool fequal(const Frac& x, const Frac& y) const { return x == y; }
    bool fin_ring(const Frac& x) const { return x.get_den() == 1; }
    Elem fto_ring(const Frac& x) const {
        if (!fin_ring(x)) throw precondition_error("value is not an integer: " + x.get_str());
        return x.get_num();
    }
    std::pair<Elem, Elem> fnum_den(const Frac& x) const { return {x.get_num(), x.get_den()}; }
    std::string fto_string(const Frac& x) const { return x.get_str(); }
};

}  // namespace primval

#endif
