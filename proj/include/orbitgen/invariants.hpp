#ifndef ORBITGEN_INVARIANTS_HPP
#define ORBITGEN_INVARIANTS_HPP

#include <cstddef>

#include "orbitgen/group.hpp"
#include "orbitgen/polynomial.hpp"

namespace orbitgen {

/// Sum of x^b over the G-orbit of the exponent vector a; every coefficient is 1.
SparsePolynomial orbit_sum(const PermutationGroup& group, const IntegerVector& exponents);

/// (1/|G|) sum_{sigma in G} sigma . P. Throws LimitExceeded when |G| is
/// above the element-stream bound.
SparsePolynomial reynolds(const PermutationGroup& group, const SparsePolynomial& p);

/// Checks the generators only; invariance under them implies invariance
/// under the whole group.
bool is_invariant(const PermutationGroup& group, const SparsePolynomial& p);

/// { sigma in S_n : sigma . P = P } by filtering all n! permutations.
/// Throws LimitExceeded when n is above the brute-force degree bound.
PermutationGroup polynomial_stabilizer_bruteforce(const SparsePolynomial& p, std::size_t n);

} // namespace orbitgen

#endif // ORBITGEN_INVARIANTS_HPP
