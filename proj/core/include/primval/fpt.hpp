/**
 * @file fpt.hpp
 * @brief The F_p[t] backend: polynomials over a prime field in the
 *        variable t, with fraction field F_p(t).
 *
 * Primes are monic irreducibles; units are the nonzero constants.
 * Factorization is squarefree decomposition, distinct-degree splitting,
 * then Cantor-Zassenhaus equal-degree splitting driven by a seeded
 * deterministic pseudorandom sequence.
 */
#ifndef PRIMVAL_FPT_HPP
#define PRIMVAL_FPT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "primval/ring.hpp"

namespace primval {

/// Dense polynomial over F_p in t: ascending coefficients, no trailing
/// zeros, every coefficient already reduced mod p. The zero polynomial has
/// an empty coefficient vector. p == 0 marks a default-constructed zero
/// that is compatible with any ring.
struct FpPoly {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> c;

    long degree() const { return (long)c.size() - 1; }
    bool is_zero() const { return c.empty(); }

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        if (a.c.empty() && b.c.empty()) return true;
        return a.p == b.p && a.c == b.c;
    }
};

FpPoly fp_make(std::uint32_t p, std::vector<long> coeffs);
FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_neg(const FpPoly& a);
/// Quotient and remainder; b nonzero.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);                  // monic
XGcd<FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b);           // g monic
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod);
bool fp_irreducible(const FpPoly& f);
/// Complete factorization into monic irreducibles (ascending by degree
/// then lexicographic coefficients); f nonzero. The unit (the leading
/// coefficient) is returned as first component.
std::pair<FpPoly, std::vector<std::pair<FpPoly, unsigned>>> fp_factor(const FpPoly& f,
                                                                      std::uint64_t seed);
/// (deg, then coefficients from the leading one down): the enumeration order.
bool fp_less(const FpPoly& a, const FpPoly& b);
std::string fp_to_string(const FpPoly& a, char var = 't');

/// Reduced rational function over F_p: den monic, gcd(num, den) = 1.
struct FpRat {
    FpPoly num, den;

    friend bool operator==(const FpRat& a, const FpRat& b) {
        return a.num == b.num && a.den == b.den;
    }
};

class FptRing {
public:
    using Elem = FpPoly;
    using Frac = FpRat;
    static constexpr RingKind kind = RingKind::PolyOverFp;
    static constexpr bool units_finite = true;

    explicit FptRing(std::uint32_t p, std::uint64_t seed = 0);

    std::uint32_t p() const { return p_; }
    bool spec_finite() const { return false; }
    std::string name() const { return "fpt:" + std::to_string(p_); }

    Elem zero() const { return FpPoly{p_, {}}; }
    Elem one() const { return from_long(1); }
    Elem from_long(long n) const;
    /// The generator t itself.
    Elem var_t() const { return FpPoly{p_, {0, 1}}; }

    Elem add(const Elem& a, const Elem& b) const { return fp_add(bind(a), bind(b)); }
    Elem sub(const Elem& a, const Elem& b) const { return fp_sub(bind(a), bind(b)); }
    Elem mul(const Elem& a, const Elem& b) const { return fp_mul(bind(a), bind(b)); }
    Elem neg(const Elem& a) const { return fp_neg(bind(a)); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_unit(const Elem& a) const { return a.c.size() == 1; }
    bool equal(const Elem& a, const Elem& b) const { return bind(a) == bind(b); }
    bool less(const Elem& a, const Elem& b) const { return fp_less(bind(a), bind(b)); }

    bool divides(const Elem& d, const Elem& a) const;
    Elem div_exact(const Elem& a, const Elem& d) const;

    Elem gcd(const Elem& a, const Elem& b) const { return fp_gcd(bind(a), bind(b)); }
    XGcd<Elem> xgcd(const Elem& a, const Elem& b) const { return fp_xgcd(bind(a), bind(b)); }

    Elem normalize(const Elem& a) const { return fp_monic(bind(a)); }
    Elem unit_part(const Elem& a) const {
        if (a.is_zero()) return one();
        return FpPoly{p_, {a.c.back()}};
    }

    bool is_prime(const Elem& a) const { return fp_irreducible(bind(a)); }
    Factored<Elem> factor(const Elem& a, const FactorBudget& = {}) const;
    long valuation(const Elem& p, const Elem& a) const;

    Elem mod(const Elem& a, const Elem& m) const { return fp_divmod(bind(a), bind(m)).second; }

    mpz_class residue_count(const Elem& m) const;
    Elem residue_at(const Elem& m, const mpz_class& i) const {
        (void)m;
        return enumerate_at(i);
    }

    /// Base-p digits of the index become the coefficients, so the order is
    /// by degree, then lexicographic from the leading coefficient down.
    Elem enumerate_at(const mpz_class& i) const;

    /// Monic irreducibles of degree <= bound.
    std::vector<Elem> primes_upto(long bound) const;

    std::string to_string(const Elem& a) const { return fp_to_string(a); }

    Frac frac(const Elem& a) const { return FpRat{bind(a), one()}; }
    Frac fadd(const Frac& x, const Frac& y) const;
    Frac fsub(const Frac& x, const Frac& y) const { return fadd(x, fneg(y)); }
    Frac fmul(const Frac& x, const Frac& y) const;
    Frac fneg(const Frac& x) const { return FpRat{neg(x.num), x.den}; }
    Frac fdiv(const Frac& x, const Frac& y) const;
    bool fis_zero(const Frac& x) const { return x.num.is_zero(); }
    bool fequal(const Frac& x, const Frac& y) const {
        return bind(x.num) == bind(y.num) && bind(x.den) == bind(y.den);
    }
    bool fin_ring(const Frac& x) const { return is_unit(x.den) || x.num.is_zero(); }
    Elem fto_ring(const Frac& x) const;
    std::pair<Elem, Elem> fnum_den(const Frac& x) const { return {bind(x.num), bind(x.den)}; }
    std::string fto_string(const Frac& x) const;

private:
    // Rebinds a default-constructed zero (p == 0) to this ring and checks
    // ring membership of everything else.
    Elem bind(const Elem& a) const;
    Frac reduce(const Elem& num, const Elem& den) const;

    std::uint32_t p_;
    std::uint64_t seed_;
};

}  // namespace primval

#endif
