#include "primval/qfactor.hpp"

#include <algorithm>

#include "primval/fpt.hpp"
#include "primval/intfactor.hpp"

namespace primval {

namespace {

// ---- dense Z[X] vectors with explicit modular reduction ----------------
// Coefficients ascending; trailing zeros stripped; reduction keeps
// canonical representatives in [0, m).

using ZX = std::vector<mpz_class>;

void zx_strip(ZX& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZX zx_mod(ZX f, const mpz_class& m) {
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    zx_strip(f);
    return f;
}

ZX zx_add(const ZX& a, const ZX& b, const mpz_class& m) {
    ZX r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return zx_mod(std::move(r), m);
}

ZX zx_sub(const ZX& a, const ZX& b, const mpz_class& m) {
    ZX r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return zx_mod(std::move(r), m);
}

ZX zx_mul(const ZX& a, const ZX& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZX r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zx_mod(std::move(r), m);
}

// divisor must be monic
std::pair<ZX, ZX> zx_divmod_monic(const ZX& a, const ZX& b, const mpz_class& m) {
    ZX q, r = a;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, 0);
        for (long i = (long)(a.size() - b.size()); i >= 0; --i) {
            if (r.size() < b.size() + i) continue;
            mpz_class coef = r[b.size() - 1 + i];
            if (coef == 0) continue;
            q[i] = coef;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= coef * b[j];
            r = zx_mod(std::move(r), m);
        }
    }
    return {zx_mod(std::move(q), m), zx_mod(std::move(r), m)};
}

// symmetric representative in (-m/2, m/2]
ZX zx_symmetric(ZX f, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    zx_strip(f);
    return f;
}

FpPoly zx_to_fp(const ZX& f, std::uint32_t p) {
    FpPoly r{p, {}};
    r.c.reserve(f.size());
    for (const auto& c : f) r.c.push_back((std::uint32_t)mpz_fdiv_ui(c.get_mpz_t(), p));
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
}

ZX fp_to_zx(const FpPoly& f) {
    ZX r;
    r.reserve(f.c.size());
    for (auto c : f.c) r.emplace_back(c);
    return r;
}

mpz_class zx_content(const ZX& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// content and sign removed (leading coefficient positive); f nonzero
ZX zx_primitive(ZX f) {
    mpz_class g = zx_content(f);
    if (f.back() < 0) g = -g;
    for (auto& c : f) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return f;
}

// exact division test in Z[X]; both primitive with positive lc
bool zx_divides(const ZX& d, const ZX& f, ZX& quotient) {
    // long division over Q, checking integrality as we go is subtle with
    // non-monic divisors; divide lc(d)^(deg f - deg d + 1) * f instead
    if (f.size() < d.size()) return false;
    ZX r = f;
    long steps = (long)(f.size() - d.size()) + 1;
    mpz_class lead = d.back();
    ZX q(steps, 0);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), (unsigned long)steps);
    for (auto& c : r) c *= scale;
    for (long i = steps - 1; i >= 0; --i) {
        if ((long)r.size() < (long)d.size() + i) continue;
        mpz_class top = r[d.size() - 1 + i];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class coef = top / lead;
        q[i] = coef;
        for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= coef * d[j];
        zx_strip(r);
    }
    if (!r.empty()) return false;
    // q equals scale * (f/d); recover the true quotient
    mpz_class down = scale;
    for (auto& c : q) {
        if (!mpz_divisible_p(c.get_mpz_t(), down.get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), down.get_mpz_t());
    }
    zx_strip(q);
    quotient = q;
    return true;
}

mpz_class zx_norm2_ceil(const ZX& f) {
    mpz_class s = 0;
    for (const auto& c : f) s += c * c;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    return r;
}

// Mignotte-style bound on the coefficients of any factor
mpz_class mignotte_bound(const ZX& f) {
    unsigned long n = f.size() - 1;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
    return binom * zx_norm2_ceil(f);
}

// ---- quadratic Hensel lifting -------------------------------------------

struct HenselPair {
    ZX g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod current modulus), h monic
};

// One quadratic step: lifts the pair from modulus m to m^2.
void hensel_step(HenselPair& hp, const ZX& f, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZX e = zx_sub(zx_mod(f, m2), zx_mul(hp.g, hp.h, m2), m2);
    auto [q, r] = zx_divmod_monic(zx_mul(hp.s, e, m2), hp.h, m2);
    ZX gstar = zx_add(zx_add(hp.g, zx_mul(hp.t, e, m2), m2), zx_mul(q, hp.g, m2), m2);
    ZX hstar = zx_add(hp.h, r, m2);
    ZX one{mpz_class(1)};
    ZX b = zx_sub(zx_add(zx_mul(hp.s, gstar, m2), zx_mul(hp.t, hstar, m2), m2), one, m2);
    auto [c, d] = zx_divmod_monic(zx_mul(hp.s, b, m2), hstar, m2);
    ZX sstar = zx_sub(hp.s, d, m2);
    ZX tstar = zx_sub(zx_sub(hp.t, zx_mul(hp.t, b, m2), m2), zx_mul(c, gstar, m2), m2);
    hp = {gstar, hstar, sstar, tstar};
}

// Lifts the monic mod-p factors of f (f = lc * prod u_i mod p, u_i monic,
// pairwise coprime mod p) to monic factors mod `target` = p^K.
std::vector<ZX> hensel_multifactor(const ZX& f, const std::vector<FpPoly>& factors,
                                   std::uint32_t p, const mpz_class& target) {
    mpz_class lc = f.back();
    if (factors.size() == 1) {
        mpz_class lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
            throw error("hensel: leading coefficient not invertible");
        ZX u = zx_mod(f, target);
        for (auto& c : u) c *= lcinv;
        return {zx_mod(std::move(u), target)};
    }
    // split off the first factor: g = lc*u1, h = u2*...*uk
    FpPoly g0 = factors[0];
    FpPoly h0{p, {1}};
    for (std::size_t i = 1; i < factors.size(); ++i) h0 = fp_mul(h0, factors[i]);
    {
        FpPoly lcp = zx_to_fp(ZX{lc}, p);
        g0 = fp_mul(g0, lcp);
    }
    XGcd<FpPoly> bez = fp_xgcd(g0, h0);
    HenselPair hp{fp_to_zx(g0), fp_to_zx(h0), fp_to_zx(bez.u), fp_to_zx(bez.v)};
    mpz_class m = p;
    while (m < target) {
        hensel_step(hp, f, m);
        m = m * m;
    }
    mpz_class mm = m;  // = p^(2^j) >= target; reduce results to target
    (void)mm;
    ZX u1 = zx_mod(hp.g, target);
    {
        mpz_class lcinv;
        mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        for (auto& c : u1) c *= lcinv;
        u1 = zx_mod(std::move(u1), target);
    }
    ZX h = zx_mod(hp.h, target);
    std::vector<FpPoly> rest(factors.begin() + 1, factors.end());
    std::vector<ZX> lifted = hensel_multifactor(h, rest, p, target);
    lifted.insert(lifted.begin(), u1);
    return lifted;
}

// ---- Zassenhaus ----------------------------------------------------------

// f primitive over Z, squarefree, positive lc, deg >= 1
std::vector<ZX> factor_squarefree_z(const ZX& f) {
    if (f.size() == 2) return {f};
    // deterministic choice of a good odd prime
    std::uint32_t p = 0;
    FpPoly fbar;
    for (mpz_class cand = 3;; mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t())) {
        std::uint32_t pc = (std::uint32_t)cand.get_ui();
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), pc)) continue;
        FpPoly fb = zx_to_fp(f, pc);
        if (fp_gcd(fb, fp_derivative(fb)).degree() != 0) continue;
        p = pc;
        fbar = fb;
        break;
    }
    auto [unit, modular] = fp_factor(fbar, /*seed=*/0);
    (void)unit;
    if (modular.size() == 1) return {f};
    std::vector<FpPoly> mods;
    for (auto& [q, e] : modular) {
        (void)e;
        mods.push_back(q);
    }
    // lift to p^K > 2 * |lc| * mignotte(f)
    mpz_class bound = 2 * abs(f.back()) * mignotte_bound(f) + 1;
    mpz_class target = p;
    while (target < bound) target *= p;
    std::vector<ZX> lifted = hensel_multifactor(f, mods, p, target);

    std::vector<ZX> out;
    ZX rest = f;
    std::vector<ZX> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        // subsets of the pool of the given cardinality, in increasing
        // bitmask order for determinism
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            ZX cand{rest.back()};
            for (std::size_t i : idx) cand = zx_mul(cand, pool[i], target);
            cand = zx_symmetric(std::move(cand), target);
            ZX quotient;
            if (!cand.empty() && zx_divides(zx_primitive(cand), rest, quotient)) {
                ZX g = zx_primitive(cand);
                out.push_back(g);
                rest = zx_primitive(std::move(quotient));
                std::vector<ZX> np;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                pool = np;
                found = true;
                break;
            }
            // next combination
            long j = (long)size - 1;
            while (j >= 0 && idx[j] == pool.size() - size + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (std::size_t k = j + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rest.size() > 1) out.push_back(rest);
    return out;
}

Poly<ZRing> zx_to_poly(const ZRing& ring, const ZX& f) {
    std::vector<mpq_class> c;
    c.reserve(f.size());
    for (const auto& v : f) c.emplace_back(v);
    return poly_from_fracs(ring, std::move(c));
}

bool poly_less_z(const Poly<ZRing>& a, const Poly<ZRing>& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

}  // namespace

QFactorization factor_rational_poly(const ZRing& ring, const Poly<ZRing>& f, long degree_cap) {
    if (f.is_zero()) throw precondition_error("factorization of the zero polynomial");
    if (f.degree() > degree_cap)
        throw effort_error("degree cap exceeded: " + std::to_string(f.degree()) + " > " +
                           std::to_string(degree_cap));
    QFactorization out;
    out.constant = 1;
    if (f.degree() == 0) {
        out.constant = f.c[0];
        return out;
    }
    // clear denominators and content
    mpz_class den = poly_denominator(ring, f);
    ZX fz;
    for (const auto& q : f.c) fz.push_back(mpq_class(q * den).get_num());
    mpz_class cont = zx_content(fz);
    if (fz.back() < 0) cont = -cont;
    for (auto& c : fz) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
    out.constant = mpq_class(cont, den);
    out.constant.canonicalize();

    // Yun squarefree decomposition over Q[X]
    Poly<ZRing> fq = zx_to_poly(ring, fz);
    Poly<ZRing> fd = poly_derivative(ring, fq);
    Poly<ZRing> a = poly_gcd(ring, fq, fd);
    Poly<ZRing> b = poly_div_exact(ring, fq, a);
    Poly<ZRing> c = poly_div_exact(ring, fd, a);
    Poly<ZRing> d = poly_sub(ring, c, poly_derivative(ring, b));
    std::vector<std::pair<ZX, unsigned>> squarefree;
    for (unsigned i = 1; b.degree() > 0; ++i) {
        Poly<ZRing> g = poly_gcd(ring, b, d);
        if (g.degree() > 0) {
            mpz_class gden = poly_denominator(ring, g);
            ZX gz;
            for (const auto& q : g.c) gz.push_back(mpq_class(q * gden).get_num());
            squarefree.emplace_back(zx_primitive(std::move(gz)), i);
        }
        b = poly_div_exact(ring, b, g);
        c = poly_div_exact(ring, d, g);
        d = poly_sub(ring, c, poly_derivative(ring, b));
    }

    std::vector<std::pair<Poly<ZRing>, unsigned>> factors;
    for (auto& [part, mult] : squarefree)
        for (const ZX& irr : factor_squarefree_z(part))
            factors.emplace_back(zx_to_poly(ring, irr), mult);
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) { return poly_less_z(x.first, y.first); });
    out.factors = std::move(factors);
    return out;
}

PrimitiveFactorization factor_over_q(const ZRing& ring, const Poly<ZRing>& q, long degree_cap) {
    QFactorization qf = factor_rational_poly(ring, q, degree_cap);
    PrimitiveFactorization out;
    mpq_class constant = qf.constant;
    Poly<ZRing> prod = poly_constant(ring, mpq_class(1));
    for (auto& [g, mult] : qf.factors) {
        ReprDecomposition<ZRing> rd = repr_decompose(ring, g);
        // g = (A/B) * P with P totally primitive; fold the constants
        for (unsigned i = 0; i < mult; ++i) constant *= mpq_class(rd.a, rd.b);
        out.factors.emplace_back(rd.p, mult);
        prod = poly_mul(ring, prod, poly_pow(ring, rd.p, mult));
    }
    out.gamma = gcd_values(ring, prod);
    mpq_class ab = constant * out.gamma;
    ab.canonicalize();
    out.a = ab.get_num();
    out.b = ab.get_den();
    return out;
}

}  // namespace primval
