/**
 * @file poly.hpp
 * @brief Dense polynomials over the fraction field K of the active
 *        backend: exact arithmetic, evaluation, composition, derivative,
 *        Euclidean gcd/xgcd in K[X], denominator clearing and Bezout
 *        certificates with constant right-hand side.
 *
 * X is the polynomial variable throughout; for the F_p[t] backend the
 *        coefficients themselves are rational functions in t.
 */
#ifndef PRIMVAL_POLY_HPP
#define PRIMVAL_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "primval/ring.hpp"

namespace primval {

/// Coefficients ascending by degree; no trailing zeros. Zero polynomial
/// has an empty coefficient vector.
template <PID R>
struct Poly {
    std::vector<typename R::Frac> c;

    long degree() const { return (long)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
};

template <PID R>
void poly_strip(const R& ring, Poly<R>& f) {
    while (!f.c.empty() && ring.fis_zero(f.c.back())) f.c.pop_back();
}

template <PID R>
Poly<R> poly_from_fracs(const R& ring, std::vector<typename R::Frac> coeffs) {
    Poly<R> f{std::move(coeffs)};
    poly_strip(ring, f);
    return f;
}

template <PID R>
Poly<R> poly_constant(const R& ring, const typename R::Frac& v) {
    return poly_from_fracs(ring, {v});
}

template <PID R>
Poly<R> poly_x(const R& ring) {
    return Poly<R>{{ring.frac(ring.zero()), ring.frac(ring.one())}};
}

template <PID R>
Poly<R> poly_from_longs(const R& ring, const std::vector<long>& coeffs) {
    std::vector<typename R::Frac> fr;
    fr.reserve(coeffs.size());
    for (long v : coeffs) fr.push_back(ring.frac(ring.from_long(v)));
    return poly_from_fracs(ring, std::move(fr));
}

template <PID R>
bool poly_equal(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!ring.fequal(a.c[i], b.c[i])) return false;
    return true;
}

template <PID R>
Poly<R> poly_add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    std::vector<typename R::Frac> c(std::max(a.c.size(), b.c.size()), ring.frac(ring.zero()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c.size()) c[i] = ring.fadd(c[i], a.c[i]);
        if (i < b.c.size()) c[i] = ring.fadd(c[i], b.c[i]);
    }
    return poly_from_fracs(ring, std::move(c));
}

template <PID R>
Poly<R> poly_neg(const R& ring, const Poly<R>& a) {
    Poly<R> r = a;
    for (auto& x : r.c) x = ring.fneg(x);
    return r;
}

template <PID R>
Poly<R> poly_sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    return poly_add(ring, a, poly_neg(ring, b));
}

template <PID R>
Poly<R> poly_mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<R>{};
    std::vector<typename R::Frac> c(a.c.size() + b.c.size() - 1, ring.frac(ring.zero()));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = ring.fadd(c[i + j], ring.fmul(a.c[i], b.c[j]));
    return poly_from_fracs(ring, std::move(c));
}

template <PID R>
Poly<R> poly_scale(const R& ring, const typename R::Frac& s, const Poly<R>& a) {
    std::vector<typename R::Frac> c;
    c.reserve(a.c.size());
    for (const auto& x : a.c) c.push_back(ring.fmul(s, x));
    return poly_from_fracs(ring, std::move(c));
}

template <PID R>
Poly<R> poly_pow(const R& ring, const Poly<R>& a, unsigned e) {
    Poly<R> r = poly_constant(ring, ring.frac(ring.one()));
    for (unsigned i = 0; i < e; ++i) r = poly_mul(ring, r, a);
    return r;
}

/// Division with remainder in K[X]; b nonzero.
template <PID R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    Poly<R> q{}, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        typename R::Frac coef = ring.fdiv(r.c.back(), b.c.back());
        if ((long)q.c.size() < shift + 1) q.c.resize(shift + 1, ring.frac(ring.zero()));
        q.c[shift] = ring.fadd(q.c[shift], coef);
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[shift + j] = ring.fsub(r.c[shift + j], ring.fmul(coef, b.c[j]));
        poly_strip(ring, r);
    }
    poly_strip(ring, q);
    return {q, r};
}

template <PID R>
Poly<R> poly_div_exact(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    auto [q, r] = poly_divmod(ring, a, b);
    if (!r.is_zero()) throw precondition_error("polynomial division is not exact");
    return q;
}

template <PID R>
Poly<R> poly_monic(const R& ring, const Poly<R>& a) {
    if (a.is_zero()) return a;
    return poly_scale(ring, ring.fdiv(ring.frac(ring.one()), a.c.back()), a);
}

/// Monic gcd in K[X]; gcd(0, 0) = 0.
template <PID R>
Poly<R> poly_gcd(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> x = a, y = b;
    while (!y.is_zero()) {
        Poly<R> r = poly_divmod(ring, x, y).second;
        x = y;
        y = r;
    }
    return poly_monic(ring, x);
}

template <PID R>
struct PolyXGcd {
    Poly<R> g, u, v;  // u*a + v*b = g, g monic (or zero)
};

template <PID R>
PolyXGcd<R> poly_xgcd(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    Poly<R> one = poly_constant(ring, ring.frac(ring.one()));
    Poly<R> r0 = a, r1 = b, s0 = one, s1{}, t0{}, t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(ring, r0, r1);
        r0 = r1;
        r1 = r;
        Poly<R> ns = poly_sub(ring, s0, poly_mul(ring, q, s1));
        s0 = s1;
        s1 = ns;
        Poly<R> nt = poly_sub(ring, t0, poly_mul(ring, q, t1));
        t0 = t1;
        t1 = nt;
    }
    if (!r0.is_zero()) {
        typename R::Frac inv = ring.fdiv(ring.frac(ring.one()), r0.c.back());
        r0 = poly_scale(ring, inv, r0);
        s0 = poly_scale(ring, inv, s0);
        t0 = poly_scale(ring, inv, t0);
    }
    return {r0, s0, t0};
}

template <PID R>
typename R::Frac poly_eval(const R& ring, const Poly<R>& f, const typename R::Frac& x) {
    typename R::Frac acc = ring.frac(ring.zero());
    for (std::size_t i = f.c.size(); i-- > 0;) acc = ring.fadd(ring.fmul(acc, x), f.c[i]);
    return acc;
}

template <PID R>
typename R::Frac poly_eval_elem(const R& ring, const Poly<R>& f, const typename R::Elem& m) {
    return poly_eval(ring, f, ring.frac(m));
}

/// Exact evaluation plus the in-ring report (the operation the value-set
/// machinery is built on).
template <PID R>
struct EvalResult {
    typename R::Frac value;
    bool in_ring;
};

template <PID R>
EvalResult<R> evaluate(const R& ring, const Poly<R>& f, const typename R::Frac& x) {
    typename R::Frac v = poly_eval(ring, f, x);
    return {v, ring.fin_ring(v)};
}

template <PID R>
Poly<R> poly_derivative(const R& ring, const Poly<R>& f) {
    std::vector<typename R::Frac> c;
    for (std::size_t i = 1; i < f.c.size(); ++i)
        c.push_back(ring.fmul(ring.frac(ring.from_long((long)i)), f.c[i]));
    return poly_from_fracs(ring, std::move(c));
}

/// No multiple roots in any extension of K: deg gcd(f, f') = 0.
template <PID R>
bool is_separable(const R& ring, const Poly<R>& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(ring, f, poly_derivative(ring, f)).degree() == 0;
}

template <PID R>
Poly<R> poly_compose(const R& ring, const Poly<R>& f, const Poly<R>& g) {
    Poly<R> acc{};
    for (std::size_t i = f.c.size(); i-- > 0;)
        acc = poly_add(ring, poly_mul(ring, acc, g), poly_constant(ring, f.c[i]));
    return acc;
}

/// f(a + bX) for ring elements a, b.
template <PID R>
Poly<R> poly_compose_affine(const R& ring, const Poly<R>& f, const typename R::Elem& a,
                            const typename R::Elem& b) {
    Poly<R> lin = poly_from_fracs(ring, {ring.frac(a), ring.frac(b)});
    return poly_compose(ring, f, lin);
}

/// Least common denominator B of the coefficients: B*f has coefficients
/// in R. B = 1 for the zero polynomial. Normalized.
template <PID R>
typename R::Elem poly_denominator(const R& ring, const Poly<R>& f) {
    typename R::Elem b = ring.one();
    for (const auto& x : f.c) b = lcm(ring, b, ring.fnum_den(x).second);
    return ring.normalize(b);
}

/// Coefficients of f as ring elements; requires every coefficient in R.
template <PID R>
std::vector<typename R::Elem> poly_ring_coeffs(const R& ring, const Poly<R>& f) {
    std::vector<typename R::Elem> out;
    out.reserve(f.c.size());
    for (const auto& x : f.c) out.push_back(ring.fto_ring(x));
    return out;
}

template <PID R>
bool poly_has_ring_coeffs(const R& ring, const Poly<R>& f) {
    for (const auto& x : f.c)
        if (!ring.fin_ring(x)) return false;
    return true;
}

/// gcd of the coefficients of a polynomial with coefficients in R.
template <PID R>
typename R::Elem poly_content(const R& ring, const Poly<R>& f) {
    typename R::Elem g = ring.zero();
    for (const auto& x : f.c) g = ring.gcd(g, ring.fto_ring(x));
    return ring.normalize(g);
}

/// Bezout certificate with constant right-hand side: f, g over R with
/// P1*f + P2*g = C, C a nonzero ring element. Requires P1, P2 coprime
/// in K[X]. C is not minimized.
template <PID R>
struct BezoutConstant {
    Poly<R> f, g;
    typename R::Elem c;
};

template <PID R>
BezoutConstant<R> bezout_constant(const R& ring, const Poly<R>& p1, const Poly<R>& p2) {
    PolyXGcd<R> e = poly_xgcd(ring, p1, p2);
    if (e.g.degree() != 0)
        throw precondition_error("bezout_constant: polynomials are not coprime in K[X]");
    // e.g is the constant 1; clear the cofactors' denominators.
    typename R::Elem den = lcm(ring, poly_denominator(ring, e.u), poly_denominator(ring, e.v));
    typename R::Frac scale = ring.frac(den);
    return {poly_scale(ring, scale, e.u), poly_scale(ring, scale, e.v), den};
}

}  // namespace primval

#endif
