#include "orbitgen/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "orbitgen/limits.hpp"

namespace orbitgen {

SparsePolynomial orbit_sum(const PermutationGroup& group, const IntegerVector& exponents) {
  SparsePolynomial out(group.degree());
  for (const auto& e : orbit_of_vector(group, exponents))
    out.add_term(e, 1);
  return out;
}

SparsePolynomial reynolds(const PermutationGroup& group, const SparsePolynomial& p) {
  if (p.nvars() != group.degree())
    throw std::invalid_argument("reynolds: polynomial in " + std::to_string(p.nvars()) +
                                " variables, group of degree " + std::to_string(group.degree()));
  if (group.order() > desk_limits().element_stream_max)
    throw LimitExceeded("reynolds: group order " + group.order().str() +
                        " exceeds the element-stream bound");
  SparsePolynomial sum(p.nvars());
  for (const auto& sigma : group.elements())
    sum += act(sigma, p);
  sum *= Rational(1, group.order());
  return sum;
}

bool is_invariant(const PermutationGroup& group, const SparsePolynomial& p) {
  if (p.nvars() != group.degree())
    throw std::invalid_argument("is_invariant: variable count differs from group degree");
  for (const auto& g : group.generators())
    if (act(g, p) != p)
      return false;
  return true;
}

PermutationGroup polynomial_stabilizer_bruteforce(const SparsePolynomial& p, std::size_t n) {
  if (p.nvars() != n)
    throw std::invalid_argument("polynomial_stabilizer_bruteforce: variable count differs from n");
  if (n > desk_limits().brute_force_max_degree)
    throw LimitExceeded("polynomial stabilizer: S_" + std::to_string(n) +
                        " is above the brute-force degree bound of " +
                        std::to_string(desk_limits().brute_force_max_degree));
  PermutationGroup result = PermutationGroup::trivial(n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    auto sigma = Permutation::from_images(images);
    if (result.contains(sigma))
      continue;
    bool fixes = true;
    for (const auto& [e, c] : p.terms()) {
      if (p.coefficient(act(sigma, e)) != c) {
        fixes = false;
        break;
      }
    }
    if (fixes)
      result = result.with_generator(sigma);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

} // namespace orbitgen
