#ifndef ORBITGEN_ORACLE_HPP
#define ORBITGEN_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitgen/group.hpp"
#include "orbitgen/integer_vector.hpp"
#include "orbitgen/numeric.hpp"

namespace orbitgen {

/// coefficient * prod_k a_k^{exponents[k]}
struct CycleIndexMonomial {
  std::map<std::size_t, std::size_t> exponents; // cycle length -> multiplicity
  Rational coefficient;

  friend bool operator==(const CycleIndexMonomial&, const CycleIndexMonomial&) = default;
};

/// (1/|G|) sum_g prod_k a_k^{c_k(g)}, monomials sorted by exponent map.
/// Throws LimitExceeded when |G| is above the element-stream bound.
std::vector<CycleIndexMonomial> cycle_index(const PermutationGroup& group);

std::string to_string(const std::vector<CycleIndexMonomial>& index);

/// Number of orbits of vectors with entries in {0..max_part}, optionally
/// restricted to a degree. Without max_part a degree is required (entries
/// are then unbounded).
BigInt burnside_count(const PermutationGroup& group, std::optional<std::int64_t> max_part,
                      std::optional<std::int64_t> degree = std::nullopt);

/// The finite box scanned by the brute-force oracles.
struct BoxConstraint {
  std::optional<std::int64_t> max_part;
  std::optional<std::int64_t> degree; // exact degree
  std::optional<IntegerVector> ceiling;
  std::optional<std::int64_t> max_degree;

  /// Same box as GenerationConfig::staircase.
  static BoxConstraint staircase(std::size_t n);
};

/// Every box vector that is the maximum of its orbit, in lexicographic
/// order. Throws LimitExceeded when the box exceeds the desk bound.
std::vector<IntegerVector> brute_force_canonicals(const PermutationGroup& group,
                                                  const BoxConstraint& box);

std::uint64_t brute_force_orbit_count(const PermutationGroup& group, const BoxConstraint& box);

/// Visits every box vector in lexicographic order.
template <typename Visit>
void for_each_box_vector(std::size_t n, const BoxConstraint& box, Visit&& visit);

} // namespace orbitgen

#include "orbitgen/detail/box_impl.hpp"

#endif // ORBITGEN_ORACLE_HPP
