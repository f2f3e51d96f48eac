#include "orbitgen/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace orbitgen {

namespace {

using VectorSet = std::unordered_set<IntegerVector, IntegerVectorHash>;

template <bool Count>
CanonicalTest run_canonical_test(const IntegerVector& v, const StrongGeneratingSet& sgs) {
  const std::size_t n = v.size();
  if (n != sgs.degree())
    throw std::invalid_argument("is_canonical: vector length " + std::to_string(n) +
                                " differs from group degree " + std::to_string(sgs.degree()));
  CanonicalTest result;
  VectorSet explored;

  // Sets with first-seen iteration order.
  std::vector<IntegerVector> todo{v};
  std::vector<IntegerVector> next_todo;
  VectorSet next_seen;

  for (std::size_t i = 0; i < n; ++i) {
    const auto transversal = sgs.transversal(i);
    const auto orbit = sgs.orbit(i);
    const auto target = v[i];
    next_todo.clear();
    next_seen.clear();
    for (const auto& w : todo) {
      for (std::size_t k = 0; k < transversal.size(); ++k) {
        // t_b moves the entry at position b into position i.
        const auto entry = w[static_cast<std::size_t>(orbit[k])];
        if constexpr (Count)
          explored.insert(k == 0 ? w : act(transversal[k], w));
        if (entry > target) {
          if constexpr (Count)
            result.explored = explored.size();
          return result;
        }
        if (entry < target)
          continue;
        auto child = k == 0 ? w : act(transversal[k], w);
        if (next_seen.insert(child).second)
          next_todo.push_back(std::move(child));
      }
    }
    std::swap(todo, next_todo);
  }
  result.canonical = true;
  if constexpr (Count)
    result.explored = explored.size();
  return result;
}

} // namespace

bool is_canonical(const IntegerVector& v, const StrongGeneratingSet& sgs) {
  return run_canonical_test<false>(v, sgs).canonical;
}

CanonicalTest is_canonical_counted(const IntegerVector& v, const StrongGeneratingSet& sgs) {
  return run_canonical_test<true>(v, sgs);
}

IntegerVector canonical_representative_bruteforce(const IntegerVector& v, const PermutationGroup& group) {
  auto orbit = orbit_of_vector(group, v);
  return *std::max_element(orbit.begin(), orbit.end());
}

} // namespace orbitgen
