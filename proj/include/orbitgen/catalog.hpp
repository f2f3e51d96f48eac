#ifndef ORBITGEN_CATALOG_HPP
#define ORBITGEN_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitgen/group.hpp"

namespace orbitgen {

// Standard generators, 1-based cycle notation in the comments.
PermutationGroup trivial_group(std::size_t n);
PermutationGroup cyclic(std::size_t n);      // (1,...,n)
PermutationGroup dihedral(std::size_t n);    // (1,...,n), (1,n)(2,n-1)...
PermutationGroup symmetric(std::size_t n);   // (1,...,n), (1,2)
PermutationGroup alternating(std::size_t n); // (1,2,k) for k = 3..n
PermutationGroup frobenius_20();             // (1,2,3,4,5), (2,3,5,4)

struct NamedGroup {
  std::string name;
  PermutationGroup group;
};

/// Resolves trivialN, cyclicN, dihedralN, symmetricN, alternatingN,
/// frobenius20 and pairsN (induced action of S_N on unordered pairs).
/// Returns nullopt for unknown names; throws for a known family with a bad
/// parameter.
std::optional<PermutationGroup> named_group(std::string_view name);

/// Every catalog group of degree <= max_degree (pairsN included when its
/// degree N(N-1)/2 fits), in a fixed order.
std::vector<NamedGroup> bundled_groups(std::size_t max_degree);

/// The five transitive groups of degree 5, ordered as in the standard
/// transitive-group numbering: C5, D5, F20, A5, S5.
std::vector<NamedGroup> transitive_degree5();

} // namespace orbitgen

#endif // ORBITGEN_CATALOG_HPP
