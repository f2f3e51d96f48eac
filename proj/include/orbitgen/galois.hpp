#ifndef ORBITGEN_GALOIS_HPP
#define ORBITGEN_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitgen/group.hpp"
#include "orbitgen/polynomial.hpp"

namespace orbitgen {

struct RefinementStep {
  IntegerVector vector;
  PermutationGroup orbit_stabilizer; // set stabilizer in S_n of the G-orbit of vector
  PermutationGroup cumulative;       // intersection of all orbit stabilizers so far
};

struct RefinementChain {
  std::vector<RefinementStep> steps; // steps[0] is the root with S_n twice
  PermutationGroup target;

  bool complete() const { return !steps.empty() && steps.back().cumulative.order() == target.order(); }
};

/// Walks the canonical vectors of G breadth-first (increasing degree, fixed
/// sibling order), intersecting the S_n-stabilizers of their orbits into a
/// running group. A step is recorded whenever the running order drops; the
/// walk stops once it equals |G|.
///
/// Terminates for every G, since a vector with n distinct entries has an
/// orbit whose stabilizer is G itself; `degree_cap` (default n(n-1)/2) only
/// guards against bugs and raises std::runtime_error when exhausted.
RefinementChain minimal_primitive_invariant(const PermutationGroup& group,
                                            std::optional<std::int64_t> degree_cap = std::nullopt);

/// sum_k (k+1) * orbit_sum(G, v_k) over the non-root steps k = 1, 2, ...;
/// the constant 1 when the chain has only the root. Distinct coefficients
/// keep the orbit sums from being exchanged, so the stabilizer in S_n is
/// the final cumulative group. Throws std::invalid_argument on an
/// incomplete chain.
SparsePolynomial assemble_primitive_polynomial(const RefinementChain& chain);

} // namespace orbitgen

#endif // ORBITGEN_GALOIS_HPP
