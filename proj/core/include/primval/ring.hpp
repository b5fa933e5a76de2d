/**
 * @file ring.hpp
 * @brief Shared vocabulary for the principal-ideal-domain backends:
 *        error types, extended-gcd and factorization records, the backend
 *        concept, and the generic Chinese remainder combination.
 *
 * A backend models an infinite PID R together with its fraction field K.
 * Three concrete backends exist: the integers (zz.hpp), polynomials over a
 * prime field F_p in the variable t (fpt.hpp), and the localization of the
 * integers at a prime p (zloc.hpp).
 */
#ifndef PRIMVAL_RING_HPP
#define PRIMVAL_RING_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace primval {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical hypothesis of an operation does not hold (CLI exit code 2).
class precondition_error : public error {
public:
    using error::error;
};

// A configured effort bound was exhausted before an exact answer was
// reached (CLI exit code 3). Results are never silently approximated.
class effort_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

enum class RingKind { Integers, PolyOverFp, LocalizedIntegers };

/// Result of the extended Euclidean algorithm: u*a + v*b = g, g normalized.
template <class E>
struct XGcd {
    E g, u, v;
};

/// Exact factorization a = unit * prod(prime_i ^ exp_i), primes normalized
/// and pairwise distinct.
template <class E>
struct Factored {
    E unit;
    std::vector<std::pair<E, unsigned>> factors;

    bool is_squarefree() const {
        for (const auto& [p, e] : factors)
            if (e > 1) return false;
        return true;
    }
};

/// Effort bounds for integer factorization; other backends ignore them.
struct FactorBudget {
    unsigned long trial_bound = 1000000;  // trial division up to this bound
    unsigned long rho_iters = 20000000;   // total Pollard-Brent iterations
};

template <class R>
concept PID = requires(const R r, const typename R::Elem a, const typename R::Elem b,
                       const typename R::Frac x, const typename R::Frac y, long n,
                       const mpz_class& idx, const FactorBudget& budget) {
    typename R::Elem;
    typename R::Frac;
    { R::kind } -> std::convertible_to<RingKind>;
    { R::units_finite } -> std::convertible_to<bool>;
    { r.spec_finite() } -> std::same_as<bool>;
    { r.name() } -> std::same_as<std::string>;
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.from_long(n) } -> std::same_as<typename R::Elem>;
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.sub(a, b) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.is_unit(a) } -> std::same_as<bool>;
    { r.equal(a, b) } -> std::same_as<bool>;
    { r.less(a, b) } -> std::same_as<bool>;
    { r.divides(a, b) } -> std::same_as<bool>;
    { r.div_exact(a, b) } -> std::same_as<typename R::Elem>;
    { r.gcd(a, b) } -> std::same_as<typename R::Elem>;
    { r.xgcd(a, b) } -> std::same_as<XGcd<typename R::Elem>>;
    { r.normalize(a) } -> std::same_as<typename R::Elem>;
    { r.unit_part(a) } -> std::same_as<typename R::Elem>;
    { r.is_prime(a) } -> std::same_as<bool>;
    { r.factor(a, budget) } -> std::same_as<Factored<typename R::Elem>>;
    { r.valuation(a, b) } -> std::same_as<long>;
    { r.mod(a, b) } -> std::same_as<typename R::Elem>;
    { r.residue_count(a) } -> std::same_as<mpz_class>;
    { r.residue_at(a, idx) } -> std::same_as<typename R::Elem>;
    { r.enumerate_at(idx) } -> std::same_as<typename R::Elem>;
    { r.primes_upto(n) } -> std::same_as<std::vector<typename R::Elem>>;
    { r.to_string(a) } -> std::same_as<std::string>;
    { r.frac(a) } -> std::same_as<typename R::Frac>;
    { r.fadd(x, y) } -> std::same_as<typename R::Frac>;
    { r.fsub(x, y) } -> std::same_as<typename R::Frac>;
    { r.fmul(x, y) } -> std::same_as<typename R::Frac>;
    { r.fneg(x) } -> std::same_as<typename R::Frac>;
    { r.fdiv(x, y) } -> std::same_as<typename R::Frac>;
    { r.fis_zero(x) } -> std::same_as<bool>;
    { r.fequal(x, y) } -> std::same_as<bool>;
    { r.fin_ring(x) } -> std::same_as<bool>;
    { r.fto_ring(x) } -> std::same_as<typename R::Elem>;
    { r.fnum_den(x) } -> std::same_as<std::pair<typename R::Elem, typename R::Elem>>;
    { r.fto_string(x) } -> std::same_as<std::string>;
};

template <PID R>
typename R::Elem recompose(const R& ring, const Factored<typename R::Elem>& f) {
    typename R::Elem acc = f.unit;
    for (const auto& [p, e] : f.factors)
        for (unsigned i = 0; i < e; ++i) acc = ring.mul(acc, p);
    return acc;
}

/// Least common multiple, normalized; lcm(0, x) = 0.
template <PID R>
typename R::Elem lcm(const R& ring, const typename R::Elem& a, const typename R::Elem& b) {
    if (ring.is_zero(a) || ring.is_zero(b)) return ring.zero();
    return ring.normalize(ring.mul(ring.div_exact(a, ring.gcd(a, b)), b));
}

/**
 * Chinese remainder combination: returns m with m = r_i mod M_i for all i,
 * reduced modulo the product of the moduli. Moduli must be nonzero nonunits
 * and pairwise coprime.
 */
template <PID R>
typename R::Elem crt(const R& ring,
                     const std::vector<std::pair<typename R::Elem, typename R::Elem>>& congruences) {
    using E = typename R::Elem;
    if (congruences.empty()) return ring.zero();
    for (const auto& [res, mod] : congruences) {
        (void)res;
        if (ring.is_zero(mod) || ring.is_unit(mod))
            throw precondition_error("crt: modulus must be a nonzero nonunit");
    }
    E value = ring.mod(congruences[0].first, congruences[0].second);
    E modulus = congruences[0].second;
    for (std::size_t i = 1; i < congruences.size(); ++i) {
        const E& r2 = congruences[i].first;
        const E& m2 = congruences[i].second;
        XGcd<E> e = ring.xgcd(modulus, m2);
        if (!ring.is_unit(e.g))
            throw precondition_error("crt: moduli are not pairwise coprime");
        // value + modulus * u/g * (r2 - value) solves both congruences.
        E diff = ring.sub(r2, value);
        E scale = ring.mul(ring.div_exact(e.u, e.g), ring.mod(diff, m2));
        E combined = ring.mul(modulus, m2);
        value = ring.mod(ring.add(value, ring.mul(modulus, scale)), combined);
        modulus = combined;
    }
    return value;
}

/// Primes of a backend within a bound, plus whether Spec R is finite
/// (in which case the list is the whole of Spec R).
template <PID R>
struct PrimeStream {
    std::vector<typename R::Elem> primes;
    bool spec_finite = false;
};

template <PID R>
PrimeStream<R> enumerate_primes(const R& ring, long bound) {
    return PrimeStream<R>{ring.primes_upto(bound), ring.spec_finite()};
}

}  // namespace primval

#endif
