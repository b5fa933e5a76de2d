/**
 * @file generator.hpp
 * @brief The constructive engine: given totally primitive P_1..P_n with a
 *        pairwise-coprime index set E and a separable subset I, emit an
 *        unbounded deterministic stream of arguments m whose product
 *        values are mutually coprime, cross-values coprime inside E, and
 *        whose P_i(m) for i in I are units or carry a witness prime of
 *        valuation exactly one. Each emission carries a certificate that
 *        is re-checkable from scratch.
 *
 * Candidates are scanned in the ring's enumeration order and every clause
 * is tested directly by evaluation (coprimality against stored prior
 * values and against the Bezout constants C_ij / D_i, distinctness,
 * witness valuations). The Bezout cache keeps the coprimality structure
 * of the inputs; progressions are folded in by composing with a + bX and
 * dividing out gamma_i = gcd{P_i(a), b}. Over a backend with finite Spec
 * the Spec primes join the coprimality set, so every emitted value is a
 * unit. Search is bounded by a configurable candidate cap; exhaustion is
 * an error carrying the resumable cursor, never a wrong emission.
 */
#ifndef PRIMVAL_GENERATOR_HPP
#define PRIMVAL_GENERATOR_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primval/decompose.hpp"
#include "primval/poly.hpp"
#include "primval/primitivity.hpp"
#include "primval/ring.hpp"

namespace primval {

enum class SignConstraint { None, Positive, Negative };

template <PID R>
struct ProblemSpec {
    std::vector<Poly<R>> polys;          // the P_i, nonconstant, totally primitive
    std::vector<std::size_t> e_set;      // 0-based; pairwise coprime in K[X]
    std::vector<std::size_t> i_set;      // subset of e_set with separable P_i
    SignConstraint sign = SignConstraint::None;        // Z only
    std::vector<typename R::Elem> avoid;               // values stay coprime to these
    std::optional<ArithProgression<R>> progression;    // Z only
};

template <PID R>
struct CrossBezout {
    std::size_t i, j;
    BezoutConstant<R> cert;  // P_i * f + P_j * g = C
};

template <PID R>
struct DerivBezout {
    std::size_t i;
    typename R::Elem k;      // denominator clearer: Q_i = K_i P_i over R
    BezoutConstant<R> cert;  // Q_i * phi + Q_i' * psi = D
};

template <PID R>
struct BezoutCache {
    std::vector<CrossBezout<R>> cross;
    std::vector<DerivBezout<R>> deriv;
    std::vector<typename R::Elem> coprime_to;  // C_ij, D_i, avoid set, finite-Spec primes
    std::vector<typename R::Elem> cal_c;       // Spec{C_ij, D_i}, sorted
};

template <PID R>
struct Witness {
    std::size_t index;  // 0-based polynomial index
    bool unit_value = false;
    typename R::Elem prime;   // set when !unit_value
    long valuation = 1;
};

template <PID R>
struct WitnessCertificate {
    typename R::Elem m;             // emitted argument in the original domain
    typename R::Elem arg;           // argument of the transformed system
    std::vector<typename R::Elem> values;  // normalized values P-hat_i(arg)
    typename R::Elem product;
    std::vector<Witness<R>> witnesses;     // one per i in I
    std::vector<typename R::Elem> prior_products;
    typename R::Elem gamma;         // product of the gamma_i; 1 without progression
    std::vector<typename R::Elem> gamma_i;
};

struct GeneratorConfig {
    FactorBudget budget;
    unsigned long candidate_cap = 200000;  // scanned candidates per emission
};

template <PID R>
struct GeneratorState {
    R ring;
    ProblemSpec<R> problem;             // as supplied
    std::vector<Poly<R>> polys;         // transformed system P-hat_i
    std::vector<typename R::Elem> gamma_i;
    typename R::Elem gamma;
    Poly<R> product;                    // prod P-hat_i
    BezoutCache<R> cache;
    GeneratorConfig config;

    std::vector<typename R::Elem> emitted;          // original-domain arguments
    std::vector<typename R::Elem> emitted_args;     // transformed-domain arguments
    std::vector<typename R::Elem> prior_products;   // transformed product values
    std::vector<std::vector<typename R::Elem>> prior_values;  // per emission, per i
    std::vector<typename R::Elem> m_primes;         // Spec of prior products, sorted
    mpz_class cursor = 0;                           // deterministic search cursor
};

/// Least residue a modulo p^nu_p with P(a) in R and P(a) not divisible by
/// p; exhaustion of the residue system proves P is not totally primitive.
template <PID R>
typename R::Elem nonvanishing_residue(const R& ring, const Poly<R>& f,
                                      const typename R::Elem& prime) {
    long nu = nu_exponent(ring, f, prime);
    typename R::Elem modulus = ring.one();
    for (long i = 0; i < nu; ++i) modulus = ring.mul(modulus, prime);
    mpz_class count = ring.residue_count(modulus);
    for (mpz_class i = 0; i < count; ++i) {
        typename R::Elem r = ring.residue_at(modulus, i);
        typename R::Frac v = poly_eval_elem(ring, f, r);
        if (!ring.fin_ring(v)) continue;
        typename R::Elem value = ring.fto_ring(v);
        if (ring.is_zero(value)) continue;
        if (!ring.divides(prime, value)) return r;
    }
    throw precondition_error("polynomial is not totally primitive: it vanishes modulo " +
                             ring.to_string(prime) + " on every residue");
}

namespace detail {

template <PID R>
void insert_sorted_unique(const R& ring, std::vector<typename R::Elem>& v,
                          const typename R::Elem& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [&](const auto& a, const auto& b) { return ring.less(a, b); });
    if (it == v.end() || !ring.equal(*it, x)) v.insert(it, x);
}

template <PID R>
bool contains_sorted(const R& ring, const std::vector<typename R::Elem>& v,
                     const typename R::Elem& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [&](const auto& a, const auto& b) { return ring.less(a, b); });
    return it != v.end() && ring.equal(*it, x);
}

template <PID R>
std::string gcd_values_message(const R& ring, const Poly<R>& f, const FactorBudget& budget) {
    return "gcd of values is " + ring.to_string(gcd_values(ring, f, budget));
}

}  // namespace detail

/**
 * Validates the hypotheses, folds in the progression, and builds the
 * Bezout cache. Throws precondition_error naming the violated hypothesis.
 */
template <PID R>
GeneratorState<R> make_generator(const R& ring, const ProblemSpec<R>& problem,
                                 const GeneratorConfig& config = {}) {
    GeneratorState<R> st{ring, problem, {}, {}, ring.one(), {}, {}, config, {}, {}, {}, {}, {}, 0};
    const std::size_t n = problem.polys.size();
    if (n == 0) throw precondition_error("no polynomials supplied");
    for (std::size_t i : problem.e_set)
        if (i >= n) throw precondition_error("index set E out of range");
    for (std::size_t i : problem.i_set) {
        if (i >= n) throw precondition_error("index set I out of range");
        if (std::find(problem.e_set.begin(), problem.e_set.end(), i) == problem.e_set.end())
            throw precondition_error("I must be a subset of E");
    }
    for (const auto& c : problem.avoid)
        if (ring.is_zero(c)) throw precondition_error("avoid elements must be nonzero");
    if (problem.sign != SignConstraint::None && R::kind != RingKind::Integers)
        throw precondition_error("sign constraints apply over Z only");
    if (problem.progression && R::kind != RingKind::Integers)
        throw precondition_error("arithmetic progressions apply over Z only");
    if (problem.progression && ring.is_zero(problem.progression->b))
        throw precondition_error("progression step b must be nonzero");

    // transformed system: compose with a + bX and divide out gamma_i
    for (std::size_t i = 0; i < n; ++i) {
        const Poly<R>& p = problem.polys[i];
        if (p.degree() < 1)
            throw precondition_error("P_" + std::to_string(i + 1) + " must be nonconstant");
        if (!is_integrally_valued(ring, p))
            throw precondition_error("P_" + std::to_string(i + 1) + " is not integrally valued");
        if (!is_totally_primitive(ring, p, config.budget))
            throw precondition_error(
                "P_" + std::to_string(i + 1) + " is not totally primitive: " +
                detail::gcd_values_message(ring, p, config.budget));
        typename R::Elem gi = ring.one();
        Poly<R> ph = p;
        if (problem.progression) {
            const auto& prog = *problem.progression;
            typename R::Elem pa = ring.fto_ring(poly_eval_elem(ring, p, prog.a));
            gi = ring.normalize(ring.gcd(pa, prog.b));
            ph = poly_compose_affine(ring, p, prog.a, prog.b);
            if (!ring.is_unit(gi))
                ph = poly_scale(ring, ring.fdiv(ring.frac(ring.one()), ring.frac(gi)), ph);
            if (!is_totally_primitive(ring, ph, config.budget))
                throw precondition_error(
                    "P_" + std::to_string(i + 1) +
                    " composed with the progression is not totally primitive after dividing by "
                    "gamma = " + ring.to_string(gi) + ": " +
                    detail::gcd_values_message(ring, ph, config.budget));
        }
        st.gamma_i.push_back(gi);
        st.gamma = ring.mul(st.gamma, gi);
        st.polys.push_back(ph);
    }
    st.product = poly_constant(ring, ring.frac(ring.one()));
    for (const auto& p : st.polys) st.product = poly_mul(ring, st.product, p);
    if (!is_totally_primitive(ring, st.product, config.budget))
        throw precondition_error("the product of the polynomials is not totally primitive: " +
                                 detail::gcd_values_message(ring, st.product, config.budget));

    // Bezout certificates for the coprimality structure
    for (std::size_t a = 0; a < problem.e_set.size(); ++a) {
        for (std::size_t b = a + 1; b < problem.e_set.size(); ++b) {
            std::size_t i = problem.e_set[a], j = problem.e_set[b];
            if (poly_gcd(ring, st.polys[i], st.polys[j]).degree() != 0)
                throw precondition_error("P_" + std::to_string(i + 1) + " and P_" +
                                         std::to_string(j + 1) +
                                         " are not coprime in K[X] (E demands it)");
            st.cache.cross.push_back({i, j, bezout_constant(ring, st.polys[i], st.polys[j])});
        }
    }
    for (std::size_t i : problem.i_set) {
        if (!is_separable(ring, st.polys[i]))
            throw precondition_error("P_" + std::to_string(i + 1) +
                                     " has multiple roots (I demands separability)");
        typename R::Elem k = poly_denominator(ring, st.polys[i]);
        Poly<R> q = poly_scale(ring, ring.frac(k), st.polys[i]);
        st.cache.deriv.push_back({i, k, bezout_constant(ring, q, poly_derivative(ring, q))});
    }
    for (const auto& cb : st.cache.cross) st.cache.coprime_to.push_back(cb.cert.c);
    for (const auto& db : st.cache.deriv) st.cache.coprime_to.push_back(db.cert.c);
    for (const auto& e : st.cache.coprime_to)
        for (const auto& [p, x] : ring.factor(e, config.budget).factors) {
            (void)x;
            detail::insert_sorted_unique(ring, st.cache.cal_c, p);
        }
    for (const auto& c : problem.avoid) st.cache.coprime_to.push_back(c);
    if (ring.spec_finite()) {
        if constexpr (R::kind == RingKind::LocalizedIntegers) {
            // Thm (v) path: force coprimality to the whole of Spec R, so
            // every emitted value is a unit.
            for (const auto& p : ring.spec_primes()) st.cache.coprime_to.push_back(p);
        }
    }
    return st;
}

namespace detail {

/// m for a given transformed-domain argument.
template <PID R>
typename R::Elem original_argument(const GeneratorState<R>& st, const typename R::Elem& arg) {
    if (!st.problem.progression) return arg;
    const auto& prog = *st.problem.progression;
    return st.ring.add(prog.a, st.ring.mul(prog.b, arg));
}

template <PID R>
bool sign_ok(const R& ring, const typename R::Elem& m, SignConstraint s) {
    if (s == SignConstraint::None) return true;
    if constexpr (R::kind == RingKind::Integers) {
        return s == SignConstraint::Positive ? m > 0 : m < 0;
    } else {
        (void)ring;
        (void)m;
        return true;
    }
}

}  // namespace detail

/**
 * Emits the next element. All theorem clauses are established directly on
 * the candidate and recorded in the certificate; the candidate cap guards
 * the scan.
 */
template <PID R>
WitnessCertificate<R> next(GeneratorState<R>& st) {
    const R& ring = st.ring;
    const std::size_t n = st.polys.size();
    const bool progression = st.problem.progression.has_value();
    for (unsigned long scanned = 0; scanned < st.config.candidate_cap; ++scanned, ++st.cursor) {
        typename R::Elem arg = ring.enumerate_at(st.cursor);
        if (progression) {
            // the progression index k runs over the naturals
            arg = ring.residue_at(ring.one(), st.cursor);
            if constexpr (R::kind == RingKind::Integers) arg = typename R::Elem(st.cursor);
        }
        typename R::Elem m = detail::original_argument(st, arg);
        if (!detail::sign_ok(ring, m, st.problem.sign)) continue;

        std::vector<typename R::Elem> values;
        values.reserve(n);
        bool reject = false;
        for (std::size_t i = 0; i < n && !reject; ++i) {
            typename R::Frac v = poly_eval_elem(ring, st.polys[i], arg);
            if (!ring.fin_ring(v)) throw error("internal: non-ring value of a transformed P_i");
            values.push_back(ring.fto_ring(v));
            if (ring.is_zero(values.back())) reject = true;  // zero values break coprimality
        }
        if (reject) continue;
        typename R::Elem product = ring.one();
        for (const auto& v : values) product = ring.mul(product, v);

        // distinctness: against prior emissions and across E at this point
        for (const auto& pv : st.prior_products)
            if (ring.equal(pv, product)) reject = true;
        for (const auto& row : st.prior_values)
            for (std::size_t i = 0; i < n && !reject; ++i)
                if (ring.equal(row[i], values[i])) reject = true;
        if (reject) continue;
        for (std::size_t a = 0; a < st.problem.e_set.size() && !reject; ++a)
            for (std::size_t b = a + 1; b < st.problem.e_set.size() && !reject; ++b)
                if (ring.equal(values[st.problem.e_set[a]], values[st.problem.e_set[b]]))
                    reject = true;
        if (reject) continue;

        // coprimality to the Bezout constants, the avoid set, prior values
        for (const auto& e : st.cache.coprime_to)
            if (!ring.is_unit(ring.gcd(product, e))) {
                reject = true;
                break;
            }
        if (reject) continue;
        for (const auto& pv : st.prior_products)
            if (!ring.is_unit(ring.gcd(product, pv))) {
                reject = true;
                break;
            }
        if (reject) continue;
        for (std::size_t a = 0; a < st.problem.e_set.size() && !reject; ++a)
            for (std::size_t b = a + 1; b < st.problem.e_set.size() && !reject; ++b)
                if (!ring.is_unit(
                        ring.gcd(values[st.problem.e_set[a]], values[st.problem.e_set[b]])))
                    reject = true;
        if (reject) continue;
        // avoid set against the original (un-normalized) per-i values
        for (const auto& c : st.problem.avoid) {
            for (std::size_t i = 0; i < n && !reject; ++i) {
                typename R::Elem orig = ring.mul(st.gamma_i[i], values[i]);
                if (!ring.is_unit(ring.gcd(orig, c))) reject = true;
            }
            if (reject) break;
        }
        if (reject) continue;

        // witnesses for i in I: a unit value (allowed only when the unit
        // group is infinite) or a prime of valuation exactly one
        std::vector<Witness<R>> witnesses;
        for (std::size_t i : st.problem.i_set) {
            const typename R::Elem& v = values[i];
            if (ring.is_unit(v)) {
                if (R::units_finite) {
                    reject = true;  // strengthen (iv): P_i(m) must leave the units
                    break;
                }
                witnesses.push_back({i, true, ring.one(), 0});
                continue;
            }
            Factored<typename R::Elem> fac = ring.factor(v, st.config.budget);
            std::optional<typename R::Elem> pick;
            for (const auto& [p, e] : fac.factors)
                if (e == 1) {
                    pick = p;
                    break;
                }
            if (!pick) {
                reject = true;  // squarefull value; no valuation-1 witness
                break;
            }
            if (detail::contains_sorted(ring, st.m_primes, *pick) ||
                detail::contains_sorted(ring, st.cache.cal_c, *pick))
                throw error("internal: witness prime collides with M or C");
            witnesses.push_back({i, false, *pick, 1});
        }
        if (reject) continue;

        // accept
        WitnessCertificate<R> cert{m,         arg,      values, product, witnesses,
                                   st.prior_products, st.gamma, st.gamma_i};
        for (const auto& v : values)
            for (const auto& [p, e] : ring.factor(v, st.config.budget).factors) {
                (void)e;
                if (detail::contains_sorted(ring, st.cache.cal_c, p))
                    throw error("internal: M_k and C are not disjoint");
                detail::insert_sorted_unique(ring, st.m_primes, p);
            }
        st.emitted.push_back(m);
        st.emitted_args.push_back(arg);
        st.prior_products.push_back(product);
        st.prior_values.push_back(values);
        ++st.cursor;
        return cert;
    }
    throw effort_error("generator: candidate cap " + std::to_string(st.config.candidate_cap) +
                       " exhausted after " + std::to_string(st.emitted.size()) +
                       " emissions (cursor " + st.cursor.get_str() + "; raise the cap to resume)");
}

/// Greedy converse extraction: keep the elements of T whose product value
/// is coprime to everything kept so far and to the cross Bezout constants.
template <PID R>
struct ExtractionReport {
    std::vector<typename R::Elem> kept;
    bool sample_pairwise_coprime = false;
    bool product_totally_primitive = false;
};

template <PID R>
ExtractionReport<R> extract_subset(const R& ring, const std::vector<typename R::Elem>& t,
                                   const std::vector<Poly<R>>& polys,
                                   const FactorBudget& budget = {}) {
    for (const auto& p : polys) {
        if (!is_totally_primitive(ring, p, budget))
            throw precondition_error("extract_subset: input polynomial is not totally primitive");
    }
    ExtractionReport<R> rep;
    typename R::Elem cprod = ring.one();
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            if (poly_gcd(ring, polys[i], polys[j]).degree() == 0)
                cprod = ring.mul(cprod, bezout_constant(ring, polys[i], polys[j]).c);
    typename R::Elem keptprod = ring.one();
    for (const auto& m : t) {
        typename R::Elem v = ring.one();
        bool zero = false;
        for (const auto& p : polys) {
            typename R::Frac val = poly_eval_elem(ring, p, m);
            if (!ring.fin_ring(val)) throw precondition_error("extract_subset: value outside R");
            typename R::Elem rv = ring.fto_ring(val);
            if (ring.is_zero(rv)) zero = true;
            v = ring.mul(v, rv);
        }
        if (zero) continue;
        if (!ring.is_unit(ring.gcd(v, keptprod))) continue;
        if (!ring.is_unit(ring.gcd(v, cprod))) continue;
        rep.kept.push_back(m);
        keptprod = ring.mul(keptprod, v);
    }
    // does the sample itself exhibit the pairwise property?
    rep.sample_pairwise_coprime = true;
    for (std::size_t a = 0; a < t.size() && rep.sample_pairwise_coprime; ++a)
        for (std::size_t b = a + 1; b < t.size() && rep.sample_pairwise_coprime; ++b)
            for (const auto& p : polys) {
                typename R::Elem v1 = ring.fto_ring(poly_eval_elem(ring, p, t[a]));
                typename R::Elem v2 = ring.fto_ring(poly_eval_elem(ring, p, t[b]));
                if (!ring.is_unit(ring.gcd(v1, v2))) {
                    rep.sample_pairwise_coprime = false;
                    break;
                }
            }
    Poly<R> prod = poly_constant(ring, ring.frac(ring.one()));
    for (const auto& p : polys) prod = poly_mul(ring, prod, p);
    rep.product_totally_primitive =
        prod.degree() >= 1 ? is_totally_primitive(ring, prod, budget) : false;
    return rep;
}

/// One emission of the factor-manipulation stream: P = P0^alpha * R with
/// R(m) in the ring and coprime to P0(m).
template <PID R>
struct FactorManipEmission {
    typename R::Elem m;
    typename R::Elem p0_value;
    typename R::Elem r_value;
    WitnessCertificate<R> cert;
};

template <PID R>
std::vector<FactorManipEmission<R>> factor_manip(const R& ring, const Poly<R>& p,
                                                 const Poly<R>& p0, unsigned count,
                                                 const GeneratorConfig& config = {}) {
    if (p.degree() < 1) throw precondition_error("factor_manip: P must be nonconstant");
    if (!is_totally_primitive(ring, p, config.budget))
        throw precondition_error("factor_manip: P is not totally primitive");
    if (!is_totally_primitive(ring, p0, config.budget))
        throw precondition_error("factor_manip: P0 is not totally primitive");
    // extract the exact power of P0 dividing P
    unsigned alpha = 0;
    Poly<R> rem = p;
    for (;;) {
        auto [q, r] = poly_divmod(ring, rem, p0);
        if (!r.is_zero()) break;
        rem = q;
        ++alpha;
    }
    if (alpha == 0) throw precondition_error("factor_manip: P0 does not divide P");
    if (poly_gcd(ring, rem, p0).degree() != 0)
        throw precondition_error("factor_manip: P0 is not a prime factor of P");

    ProblemSpec<R> spec;
    spec.polys = {p0};
    spec.e_set = {0};
    if (is_separable(ring, p0)) spec.i_set = {0};
    typename R::Elem rden = poly_denominator(ring, rem);
    if (!ring.is_unit(rden)) spec.avoid.push_back(rden);
    if (rem.degree() >= 0 && !rem.is_zero() && rem.degree() >= 1) {
        typename R::Elem c = bezout_constant(ring, p0, rem).c;
        if (!ring.is_unit(c)) spec.avoid.push_back(c);
    }
    GeneratorState<R> st = make_generator(ring, spec, config);
    std::vector<FactorManipEmission<R>> out;
    for (unsigned k = 0; k < count; ++k) {
        WitnessCertificate<R> cert = next(st);
        typename R::Frac rv = poly_eval_elem(ring, rem, cert.m);
        if (!ring.fin_ring(rv)) throw error("internal: R(m) left the ring");
        typename R::Elem rvr = ring.fto_ring(rv);
        typename R::Elem p0v = cert.values[0];
        if (!ring.is_unit(ring.gcd(p0v, rvr)))
            throw error("internal: P0(m) shares a factor with R(m)");
        out.push_back({cert.m, p0v, rvr, cert});
    }
    return out;
}

}  // namespace primval

#endif
