#include "primval/intfactor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace primval {

namespace {

// Largest bound for which the witness set below is proven deterministic
// (Sorenson & Webster): 3,317,044,064,679,887,385,961,981.
const mpz_class kDeterministicBound("3317044064679887385961981");
const long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a) {
    // n odd, n > 3, 1 < a < n-1. Returns true if a proves n composite.
    mpz_class n1 = n - 1;
    unsigned long s = mpz_scan1(n1.get_mpz_t(), 0);
    mpz_class d = n1 >> s;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n1) return false;
        if (x == 1) return true;
    }
    return true;
}

// Shared table of sieved small primes, grown on demand.
std::mutex g_prime_table_mutex;
std::vector<unsigned long> g_prime_table;
unsigned long g_prime_table_limit = 0;

void ensure_prime_table(unsigned long limit) {
    std::lock_guard<std::mutex> lock(g_prime_table_mutex);
    if (limit <= g_prime_table_limit) return;
    limit = std::max(limit, 1ul << 16);
    std::vector<bool> composite(limit + 1, false);
    g_prime_table.clear();
    for (unsigned long i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        g_prime_table.push_back(i);
        for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    g_prime_table_limit = limit;
}

std::vector<unsigned long> prime_table_copy(unsigned long limit) {
    ensure_prime_table(limit);
    std::lock_guard<std::mutex> lock(g_prime_table_mutex);
    std::vector<unsigned long> out;
    for (unsigned long p : g_prime_table) {
        if (p > limit) break;
        out.push_back(p);
    }
    return out;
}

// Pollard-Brent rho; returns a nontrivial factor of n (composite, odd,
// not a perfect power) or 0 if the iteration budget ran out. Fully
// deterministic: constants c = 1, 2, 3, ... are tried in order.
mpz_class pollard_brent(const mpz_class& n, unsigned long& iters_left) {
    for (unsigned long c = 1;; ++c) {
        if (iters_left == 0) return 0;
        mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = batch;
                if (mpz_class(r - k) < (unsigned long)batch) lim = mpz_get_ui(mpz_class(r - k).get_mpz_t());
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
                if (iters_left <= lim) {
                    iters_left = 0;
                    return 0;
                }
                iters_left -= lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_gcd(g.get_mpz_t(), mpz_class(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next constant
    }
}

void factor_rec(const mpz_class& n, unsigned long& iters_left,
                std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (int_is_prime(n)) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        // find the root: try exponents descending from log2(n)
        unsigned long maxe = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (unsigned long e = maxe; e >= 2; --e) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::map<mpz_class, unsigned> sub;
                factor_rec(root, iters_left, sub);
                for (const auto& [p, m] : sub) out[p] += m * (unsigned)e;
                return;
            }
        }
    }
    mpz_class d = pollard_brent(n, iters_left);
    if (d == 0)
        throw effort_error("factorization incomplete: effort bound exhausted on " + n.get_str());
    factor_rec(d, iters_left, out);
    factor_rec(n / d, iters_left, out);
}

}  // namespace

bool int_is_prime(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a < 2) return false;
    if (a < 4) return true;
    if (mpz_even_p(a.get_mpz_t())) return false;
    if (a <= kDeterministicBound) {
        for (long w : kWitnesses) {
            if (a == w) return true;
            if (a % w == 0) return false;
            if (miller_rabin_witness(a, mpz_class(w))) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(a.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<mpz_class, unsigned>> int_factor(const mpz_class& n,
                                                       const FactorBudget& budget) {
    if (n == 0) throw precondition_error("factor: zero input");
    mpz_class m = abs(n);
    std::map<mpz_class, unsigned> acc;
    if (m > 1) {
        unsigned long tb = budget.trial_bound;
        // never trial divide beyond sqrt(m)
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        if (root < tb) tb = mpz_get_ui(root.get_mpz_t()) + 1;
        for (unsigned long p : prime_table_copy(tb)) {
            if (m == 1) break;
            if (mpz_class(p) * p > m) break;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                acc[mpz_class(p)] += 1;
                m /= p;
            }
        }
        if (m > 1) {
            unsigned long iters = budget.rho_iters;
            factor_rec(m, iters, acc);
        }
    }
    return {acc.begin(), acc.end()};
}

long int_valuation(const mpz_class& p, const mpz_class& n) {
    if (n == 0) throw precondition_error("valuation of zero");
    mpz_class m = abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

std::vector<mpz_class> int_primes_upto(long bound) {
    std::vector<mpz_class> out;
    if (bound < 2) return out;
    for (unsigned long p : prime_table_copy((unsigned long)bound)) out.emplace_back(p);
    return out;
}

}  // namespace primval
