#include "orbitgen/galois.hpp"

#include <stdexcept>
#include <string>

#include "orbitgen/catalog.hpp"
#include "orbitgen/enum_tree.hpp"
#include "orbitgen/invariants.hpp"

namespace orbitgen {

RefinementChain minimal_primitive_invariant(const PermutationGroup& group,
                                            std::optional<std::int64_t> degree_cap) {
  const std::size_t n = group.degree();
  auto full = symmetric(n);
  RefinementChain chain{.steps = {}, .target = group};
  chain.steps.push_back({IntegerVector::zero(n), full, full});
  if (full.order() == group.order())
    return chain;

  const std::int64_t cap = degree_cap.value_or(static_cast<std::int64_t>(n * (n - 1) / 2));
  CanonicalEnumerator canonicals(GenerationConfig::up_to(group, cap));
  PermutationGroup cumulative = full;
  while (auto v = canonicals.next()) {
    auto stabilizer = set_stabilizer_of_orbit(group, *v, n);
    auto meet = intersection(cumulative, stabilizer);
    if (meet.order() < cumulative.order()) {
      cumulative = meet;
      chain.steps.push_back({std::move(*v), std::move(stabilizer), cumulative});
      if (cumulative.order() == group.order())
        return chain;
    }
  }
  throw std::runtime_error("minimal_primitive_invariant: no primitive invariant up to degree " +
                           std::to_string(cap));
}

SparsePolynomial assemble_primitive_polynomial(const RefinementChain& chain) {
  if (!chain.complete())
    throw std::invalid_argument("assemble_primitive_polynomial: chain does not reach the target order");
  const std::size_t n = chain.target.degree();
  if (chain.steps.size() == 1)
    return SparsePolynomial::constant(n, 1);
  SparsePolynomial out(n);
  for (std::size_t k = 1; k < chain.steps.size(); ++k)
    out += Rational(static_cast<long long>(k + 1)) * orbit_sum(chain.target, chain.steps[k].vector);
  return out;
}

} // namespace orbitgen
