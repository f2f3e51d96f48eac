#ifndef ORBITGEN_CANONICAL_HPP
#define ORBITGEN_CANONICAL_HPP

#include <cstddef>
#include <cstdint>

#include "orbitgen/group.hpp"
#include "orbitgen/integer_vector.hpp"

namespace orbitgen {

struct CanonicalTest {
  bool canonical = false;
  // Distinct orbit elements computed (every image g.w, kept or not) before
  // the test decided; only filled in when requested. Never exceeds the
  // orbit size.
  std::uint64_t explored = 0;
};

/// True iff v is the lexicographic maximum of its G-orbit.
///
/// Level i expands the current set of orbit elements by the transversal
/// T_{i+1}. Since those elements already agree with v on positions < i and
/// T_{i+1} fixes those positions, comparing on the first i+1 coordinates
/// reduces to comparing coordinate i. An image larger there proves v is not
/// the maximum; images equal there are carried to the next level.
bool is_canonical(const IntegerVector& v, const StrongGeneratingSet& sgs);

/// As is_canonical, also counting the part of the orbit explored.
CanonicalTest is_canonical_counted(const IntegerVector& v, const StrongGeneratingSet& sgs);

/// Testing oracle: the maximum over the orbit closure.
IntegerVector canonical_representative_bruteforce(const IntegerVector& v, const PermutationGroup& group);

} // namespace orbitgen

#endif // ORBITGEN_CANONICAL_HPP
