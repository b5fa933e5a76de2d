#include "primval/fpt.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "primval/intfactor.hpp"

namespace primval {

namespace {

std::uint32_t ring_p(const FpPoly& a, const FpPoly& b) {
    std::uint32_t p = a.p ? a.p : b.p;
    if ((a.p && a.p != p) || (b.p && b.p != p))
        throw precondition_error("backend mismatch: F_p[t] elements over different p");
    return p;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    long long t = 0, newt = 1, r = (long long)p, newr = (long long)(a % p);
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw precondition_error("inverse of noninvertible residue");
    return (std::uint64_t)((t % (long long)p + (long long)p) % (long long)p);
}

void strip(FpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

}  // namespace

FpPoly fp_make(std::uint32_t p, std::vector<long> coeffs) {
    FpPoly f;
    f.p = p;
    f.c.reserve(coeffs.size());
    for (long v : coeffs) {
        long r = v % (long)p;
        if (r < 0) r += p;
        f.c.push_back((std::uint32_t)r);
    }
    strip(f);
    return f;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    std::uint32_t p = ring_p(a, b);
    if (!p) return FpPoly{};
    FpPoly r{p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t s = (i < a.c.size() ? a.c[i] : 0u);
        s += (i < b.c.size() ? b.c[i] : 0u);
        r.c[i] = (std::uint32_t)(s % p);
    }
    strip(r);
    return r;
}

FpPoly fp_neg(const FpPoly& a) {
    FpPoly r = a;
    for (auto& x : r.c)
        if (x) x = a.p - x;
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) { return fp_add(a, fp_neg(b)); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    std::uint32_t p = ring_p(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly{p, {}};
    FpPoly r{p, {}};
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::uint64_t v = r.c[i + j] + (std::uint64_t)a.c[i] * b.c[j] % p;
            r.c[i + j] = (std::uint32_t)(v % p);
        }
    }
    strip(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    std::uint32_t p = ring_p(a, b);
    if (b.is_zero()) throw precondition_error("F_p[t] division by zero");
    FpPoly q{p, {}}, r = a;
    r.p = p;
    if (a.c.size() < b.c.size()) return {q, r};
    q.c.assign(a.c.size() - b.c.size() + 1, 0);
    std::uint64_t lcinv = inv_mod(b.c.back(), p);
    for (long i = (long)a.c.size() - b.c.size(); i >= 0; --i) {
        if (r.c.size() < b.c.size() + i) continue;
        std::uint64_t coef = r.c[b.c.size() - 1 + i] * lcinv % p;
        if (!coef) continue;
        q.c[i] = (std::uint32_t)coef;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::uint64_t sub = coef * b.c[j] % p;
            std::uint64_t cur = r.c[i + j];
            r.c[i + j] = (std::uint32_t)((cur + p - sub) % p);
        }
        strip(r);
    }
    strip(q);
    return {q, r};
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    if (a.c.back() == 1) return a;
    FpPoly r = a;
    std::uint64_t inv = inv_mod(a.c.back(), a.p);
    for (auto& x : r.c) x = (std::uint32_t)(x * inv % a.p);
    return r;
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    ring_p(a, b);
    while (!y.is_zero()) {
        FpPoly r = fp_divmod(x, y).second;
        x = y;
        y = r;
    }
    return fp_monic(x);
}

XGcd<FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b) {
    std::uint32_t p = ring_p(a, b);
    FpPoly zero{p, {}}, one{p, {1}};
    FpPoly r0 = a, r1 = b, s0 = one, s1 = zero, t0 = zero, t1 = one;
    r0.p = p;
    r1.p = p;
    while (!r1.is_zero()) {
        auto [q, r] = fp_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        FpPoly ns = fp_sub(s0, fp_mul(q, s1));
        s0 = s1;
        s1 = ns;
        FpPoly nt = fp_sub(t0, fp_mul(q, t1));
        t0 = t1;
        t1 = nt;
    }
    if (!r0.is_zero() && r0.c.back() != 1) {
        std::uint64_t inv = inv_mod(r0.c.back(), p);
        FpPoly scale{p, {(std::uint32_t)inv}};
        r0 = fp_mul(r0, scale);
        s0 = fp_mul(s0, scale);
        t0 = fp_mul(t0, scale);
    }
    return {r0, s0, t0};
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly r{a.p, {}};
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back((std::uint32_t)((std::uint64_t)a.c[i] * (i % a.p) % a.p));
    strip(r);
    return r;
}

FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod) {
    std::uint32_t p = ring_p(base, mod);
    FpPoly result{p, {1}};
    FpPoly b = fp_divmod(base, mod).second;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = fp_divmod(fp_mul(result, b), mod).second;
        k >>= 1;
        if (k > 0) b = fp_divmod(fp_mul(b, b), mod).second;
    }
    return result;
}

bool fp_less(const FpPoly& a, const FpPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

bool fp_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    std::uint32_t p = f.p;
    long n = f.degree();
    FpPoly x{p, {0, 1}};
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, (unsigned long)n);
    FpPoly xpn = fp_powmod(x, pn, f);
    if (!(fp_divmod(fp_sub(xpn, x), f).second.is_zero())) return false;
    for (auto& [q, e] : int_factor(n, FactorBudget{})) {
        (void)e;
        unsigned long nq = (unsigned long)(n / q.get_si());
        mpz_class pq;
        mpz_ui_pow_ui(pq.get_mpz_t(), p, nq);
        FpPoly h = fp_sub(fp_powmod(x, pq, f), x);
        if (fp_gcd(h, f).degree() != 0) return false;
    }
    return true;
}

namespace {

// f(t) with zero derivative is g(t^p); over F_p the p-th root of each
// coefficient is the coefficient itself.
FpPoly pth_root(const FpPoly& f) {
    FpPoly g{f.p, {}};
    for (std::size_t i = 0; i < f.c.size(); i += f.p) g.c.push_back(f.c[i]);
    strip(g);
    return g;
}

// Squarefree decomposition of a monic f: list of (monic squarefree, multiplicity).
std::vector<std::pair<FpPoly, unsigned>> squarefree_fp(const FpPoly& f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    if (f.degree() < 1) return out;
    FpPoly fd = fp_derivative(f);
    if (fd.is_zero()) {
        for (auto& [g, e] : squarefree_fp(fp_monic(pth_root(f)))) out.emplace_back(g, e * f.p);
        return out;
    }
    FpPoly c = fp_gcd(f, fd);
    FpPoly w = fp_divmod(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = fp_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(fp_monic(z), i);
        c = fp_divmod(c, y).first;
        w = y;
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [g, e] : squarefree_fp(fp_monic(pth_root(c)))) out.emplace_back(g, e * f.p);
    return out;
}

// Distinct-degree decomposition of a monic squarefree f:
// list of (product of irreducibles of degree d, d).
std::vector<std::pair<FpPoly, long>> ddf_fp(const FpPoly& f) {
    std::uint32_t p = f.p;
    std::vector<std::pair<FpPoly, long>> out;
    FpPoly x{p, {0, 1}};
    FpPoly h = x, rest = f;
    for (long d = 1; rest.degree() >= 2 * d; ++d) {
        h = fp_powmod(h, mpz_class(p), rest);
        FpPoly g = fp_gcd(fp_sub(h, x), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = fp_divmod(rest, g).first;
            h = fp_divmod(h, rest).second;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

FpPoly random_poly(std::uint32_t p, long maxdeg, std::mt19937_64& rng) {
    FpPoly r{p, {}};
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (long i = 0; i <= maxdeg; ++i) r.c.push_back(dist(rng));
    strip(r);
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of monic f, all of whose
// irreducible factors have degree d.
void edf_fp(const FpPoly& f, long d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(fp_monic(f));
        return;
    }
    std::uint32_t p = f.p;
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, (unsigned long)d);
    for (;;) {
        FpPoly a = random_poly(p, f.degree() - 1, rng);
        if (a.degree() < 1) continue;
        FpPoly g = fp_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_fp(g, d, rng, out);
            edf_fp(fp_divmod(f, g).first, d, rng, out);
            return;
        }
        FpPoly b;
        if (p == 2) {
            // trace map over F_{2^d}
            b = FpPoly{p, {}};
            FpPoly acc = fp_divmod(a, f).second;
            for (long i = 0; i < d; ++i) {
                b = fp_add(b, acc);
                acc = fp_divmod(fp_mul(acc, acc), f).second;
            }
        } else {
            mpz_class e = (pd - 1) / 2;
            b = fp_sub(fp_powmod(a, e, f), FpPoly{p, {1}});
        }
        g = fp_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_fp(g, d, rng, out);
            edf_fp(fp_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::pair<FpPoly, std::vector<std::pair<FpPoly, unsigned>>> fp_factor(const FpPoly& f,
                                                                      std::uint64_t seed) {
    if (f.is_zero()) throw precondition_error("factor: zero input");
    FpPoly unit{f.p, {f.c.back()}};
    FpPoly m = fp_monic(f);
    std::map<std::vector<std::uint32_t>, std::pair<FpPoly, unsigned>> acc;
    for (auto& [sf, mult] : squarefree_fp(m)) {
        for (auto& [prod, d] : ddf_fp(sf)) {
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(d + 1)) ^
                                (std::uint64_t)prod.degree());
            std::vector<FpPoly> irr;
            edf_fp(prod, d, rng, irr);
            for (auto& q : irr) {
                auto it = acc.find(q.c);
                if (it == acc.end())
                    acc.emplace(q.c, std::make_pair(q, mult));
                else
                    it->second.second += mult;
            }
        }
    }
    std::vector<std::pair<FpPoly, unsigned>> factors;
    for (auto& [key, v] : acc) factors.push_back(v);
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return fp_less(a.first, b.first); });
    return {unit, factors};
}

std::string fp_to_string(const FpPoly& a, char var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (!a.c[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(a.c[i]);
        } else {
            if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FptRing::FptRing(std::uint32_t p, std::uint64_t seed) : p_(p), seed_(seed) {
    if (p < 2 || p >= (1u << 31) || !int_is_prime(mpz_class(p)))
        throw precondition_error("F_p[t] characteristic must be a prime < 2^31");
}

FpPoly FptRing::bind(const Elem& a) const {
    if (a.p == p_) return a;
    if (a.p == 0 && a.is_zero()) return zero();
    throw precondition_error("backend mismatch: element belongs to a different F_p[t]");
}

FpPoly FptRing::from_long(long n) const {
    long r = n % (long)p_;
    if (r < 0) r += p_;
    FpPoly f{p_, {}};
    if (r) f.c.push_back((std::uint32_t)r);
    return f;
}

bool FptRing::divides(const Elem& d, const Elem& a) const {
    if (is_zero(d)) return is_zero(a);
    return fp_divmod(bind(a), bind(d)).second.is_zero();
}

FpPoly FptRing::div_exact(const Elem& a, const Elem& d) const {
    auto [q, r] = fp_divmod(bind(a), bind(d));
    if (!r.is_zero()) throw precondition_error("div_exact: not divisible");
    return q;
}

Factored<FpPoly> FptRing::factor(const Elem& a, const FactorBudget&) const {
    auto [unit, factors] = fp_factor(bind(a), seed_);
    return Factored<FpPoly>{unit, std::move(factors)};
}

long FptRing::valuation(const Elem& p, const Elem& a) const {
    if (is_zero(a)) throw precondition_error("valuation of zero");
    FpPoly m = bind(a);
    long v = 0;
    for (;;) {
        auto [q, r] = fp_divmod(m, bind(p));
        if (!r.is_zero()) return v;
        m = q;
        ++v;
    }
}

mpz_class FptRing::residue_count(const Elem& m) const {
    if (is_zero(m)) throw precondition_error("residues modulo zero");
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), p_, (unsigned long)m.degree());
    return n;
}

FpPoly FptRing::enumerate_at(const mpz_class& i) const {
    FpPoly f{p_, {}};
    mpz_class k = i;
    while (k > 0) {
        f.c.push_back((std::uint32_t)mpz_fdiv_ui(k.get_mpz_t(), p_));
        k /= p_;
    }
    return f;
}

std::vector<FpPoly> FptRing::primes_upto(long bound) const {
    std::vector<FpPoly> out;
    if (bound < 1) return out;
    // monic polynomials of degree d are the enumeration indices
    // [p^d, 2 p^d) offset by the leading coefficient 1
    for (long d = 1; d <= bound; ++d) {
        mpz_class pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), p_, (unsigned long)d);
        for (mpz_class i = 0; i < pd; ++i) {
            FpPoly f = enumerate_at(i);
            f.c.resize((std::size_t)d + 1, 0);
            f.c[d] = 1;
            if (fp_irreducible(f)) out.push_back(f);
        }
    }
    return out;
}

FpRat FptRing::reduce(const Elem& num, const Elem& den) const {
    if (den.is_zero()) throw precondition_error("F_p(t) division by zero");
    if (num.is_zero()) return FpRat{zero(), one()};
    FpPoly g = fp_gcd(num, den);
    FpPoly n = fp_divmod(num, g).first;
    FpPoly d = fp_divmod(den, g).first;
    // make the denominator monic
    std::uint64_t inv = inv_mod(d.c.back(), p_);
    FpPoly scale{p_, {(std::uint32_t)inv}};
    return FpRat{fp_mul(n, scale), fp_mul(d, scale)};
}

FpRat FptRing::fadd(const Frac& x, const Frac& y) const {
    return reduce(fp_add(fp_mul(bind(x.num), bind(y.den)), fp_mul(bind(y.num), bind(x.den))),
                  fp_mul(bind(x.den), bind(y.den)));
}

FpRat FptRing::fmul(const Frac& x, const Frac& y) const {
    return reduce(fp_mul(bind(x.num), bind(y.num)), fp_mul(bind(x.den), bind(y.den)));
}

FpRat FptRing::fdiv(const Frac& x, const Frac& y) const {
    if (fis_zero(y)) throw precondition_error("F_p(t) division by zero");
    return reduce(fp_mul(bind(x.num), bind(y.den)), fp_mul(bind(x.den), bind(y.num)));
}

FpPoly FptRing::fto_ring(const Frac& x) const {
    if (!fin_ring(x))
        throw precondition_error("value is not in F_p[t]: " + fto_string(x));
    if (x.num.is_zero()) return zero();
    return div_exact(x.num, x.den);
}

std::string FptRing::fto_string(const Frac& x) const {
    if (is_unit(x.den) && x.den.c[0] == 1) return fp_to_string(bind(x.num));
    std::string n = fp_to_string(bind(x.num));
    std::string d = fp_to_string(bind(x.den));
    if (x.num.c.size() > 1) n = "(" + n + ")";
    if (x.den.c.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace primval
