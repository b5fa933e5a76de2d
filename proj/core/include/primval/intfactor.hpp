/**
 * @file intfactor.hpp
 * @brief Exact primality testing and factorization of multiprecision
 *        integers at desk scale (inputs up to roughly 2^128).
 *
 * Primality is deterministic Miller-Rabin below 3.317e24 (the proven
 * witness set {2,...,41}); beyond that GMP's Baillie-PSW + Miller-Rabin
 * is used. Factorization is trial division up to a configured bound,
 * then perfect-power extraction and Pollard-Brent rho under an iteration
 * budget. Exhausting the budget raises effort_error; a wrong answer is
 * never returned.
 */
#ifndef PRIMVAL_INTFACTOR_HPP
#define PRIMVAL_INTFACTOR_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "primval/ring.hpp"

namespace primval {

bool int_is_prime(const mpz_class& n);

/// Factors |n| into ascending primes; n must be nonzero. The unit part
/// (the sign) is not part of the result.
std::vector<std::pair<mpz_class, unsigned>> int_factor(const mpz_class& n,
                                                       const FactorBudget& budget);

long int_valuation(const mpz_class& p, const mpz_class& n);

/// Ascending primes <= bound.
std::vector<mpz_class> int_primes_upto(long bound);

}  // namespace primval

#endif
