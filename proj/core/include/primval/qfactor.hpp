/**
 * @file qfactor.hpp
 * @brief Irreducible factorization in Q[X] (Zassenhaus: squarefree
 *        decomposition, factorization modulo a good prime, quadratic
 *        Hensel lifting, subset recombination) and the canonical totally
 *        primitive factorization Q = (A/(B*Gamma)) * prod P_i^alpha_i.
 *
 * Degrees are capped (default 12) so recombination stays trivial.
 */
#ifndef PRIMVAL_QFACTOR_HPP
#define PRIMVAL_QFACTOR_HPP

#include <utility>
#include <vector>

#include "primval/decompose.hpp"
#include "primval/poly.hpp"
#include "primval/zz.hpp"

namespace primval {

/// Irreducible factorization in Q[X], each factor a primitive polynomial
/// over Z with positive leading coefficient; the product of the factors
/// (with multiplicities) times `constant` equals the input exactly.
struct QFactorization {
    mpq_class constant;
    std::vector<std::pair<Poly<ZRing>, unsigned>> factors;
};

QFactorization factor_rational_poly(const ZRing& ring, const Poly<ZRing>& f,
                                    long degree_cap = 12);

/// Q = (A/(B*Gamma)) * prod P_i^alpha_i with the P_i irreducible and
/// totally primitive, Gamma = gcd of the value set of prod P_i^alpha_i.
struct PrimitiveFactorization {
    mpz_class a, b, gamma;
    std::vector<std::pair<Poly<ZRing>, unsigned>> factors;
};

PrimitiveFactorization factor_over_q(const ZRing& ring, const Poly<ZRing>& q,
                                     long degree_cap = 12);

}  // namespace primval

#endif
