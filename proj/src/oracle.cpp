#include "orbitgen/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orbitgen/limits.hpp"

namespace orbitgen {

namespace {

using CycleType = std::map<std::size_t, std::size_t>;

CycleType cycle_type(const Permutation& g) {
  CycleType type;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t length = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(g(static_cast<int>(x)))) {
      seen[x] = true;
      ++length;
    }
    ++type[length];
  }
  return type;
}

std::map<CycleType, BigInt> cycle_type_counts(const PermutationGroup& group) {
  if (group.order() > desk_limits().element_stream_max)
    throw LimitExceeded("cycle index: group order " + group.order().str() +
                        " exceeds the element-stream bound");
  std::map<CycleType, BigInt> counts;
  for (const auto& g : group.elements())
    ++counts[cycle_type(g)];
  return counts;
}

// Dense polynomial in x truncated at degree `cap`.
using Series = std::vector<BigInt>;

Series multiply(const Series& a, const Series& b, std::size_t cap) {
  Series out(cap + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= cap; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size() && i + j <= cap; ++j)
      if (b[j] != 0)
        out[i + j] += a[i] * b[j];
  }
  return out;
}

} // namespace

std::vector<CycleIndexMonomial> cycle_index(const PermutationGroup& group) {
  std::vector<CycleIndexMonomial> out;
  for (const auto& [type, count] : cycle_type_counts(group))
    out.push_back({type, Rational(count, group.order())});
  return out;
}

std::string to_string(const std::vector<CycleIndexMonomial>& index) {
  std::ostringstream out;
  bool first = true;
  for (const auto& m : index) {
    if (!first)
      out << " + ";
    first = false;
    out << orbitgen::to_string(m.coefficient);
    for (const auto& [length, mult] : m.exponents) {
      out << "*a" << length;
      if (mult != 1)
        out << '^' << mult;
    }
  }
  return out.str();
}

BigInt burnside_count(const PermutationGroup& group, std::optional<std::int64_t> max_part,
                      std::optional<std::int64_t> degree) {
  if (max_part && *max_part < 0)
    throw std::invalid_argument("burnside_count: max_part must be non-negative");
  if (degree && *degree < 0)
    return 0;
  if (!max_part && !degree)
    throw std::invalid_argument("burnside_count: infinitely many orbits without max_part or degree");

  BigInt total = 0;
  for (const auto& [type, count] : cycle_type_counts(group)) {
    if (!degree) {
      BigInt term = count;
      for (const auto& [length, mult] : type)
        term *= boost::multiprecision::pow(BigInt(*max_part + 1), static_cast<unsigned>(mult));
      total += term;
      continue;
    }
    const auto cap = static_cast<std::size_t>(*degree);
    Series product(cap + 1, 0);
    product[0] = 1;
    for (const auto& [length, mult] : type) {
      // 1 + x^k + x^{2k} + ... (+ x^{pk} when bounded)
      Series factor(cap + 1, 0);
      for (std::size_t j = 0; j * length <= cap; ++j) {
        if (max_part && static_cast<std::int64_t>(j) > *max_part)
          break;
        factor[j * length] = 1;
      }
      for (std::size_t r = 0; r < mult; ++r)
        product = multiply(product, factor, cap);
    }
    total += count * product[cap];
  }
  if (total % group.order() != 0)
    throw std::logic_error("burnside_count: non-integral orbit count");
  return total / group.order();
}

BoxConstraint BoxConstraint::staircase(std::size_t n) {
  IntegerVector ceiling(n);
  for (std::size_t i = 0; i < n; ++i)
    ceiling[i] = static_cast<IntegerVector::value_type>(n - 1 - i);
  const auto top = static_cast<std::int64_t>(n * (n - 1) / 2);
  if (top == 0)
    return {.ceiling = ceiling};
  return {.ceiling = ceiling, .max_degree = top - 1};
}

std::vector<IntegerVector> brute_force_canonicals(const PermutationGroup& group,
                                                  const BoxConstraint& box) {
  const std::size_t n = group.degree();
  if (box.ceiling && box.ceiling->size() != n)
    throw std::invalid_argument("brute force: ceiling length differs from group degree");

  // Conservative size estimate from the per-entry bounds.
  BigInt size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t b = box.max_part.value_or(box.degree.value_or(box.max_degree.value_or(0)));
    if (box.ceiling)
      b = box.max_part ? std::min<std::int64_t>(b, (*box.ceiling)[i]) : (*box.ceiling)[i];
    size *= b + 1;
  }
  if (size > desk_limits().box_max)
    throw LimitExceeded("brute force: box of up to " + size.str() + " vectors exceeds the desk bound");

  std::vector<IntegerVector> out;
  for_each_box_vector(n, box, [&](const IntegerVector& v) {
    auto orbit = orbit_of_vector(group, v);
    if (*std::max_element(orbit.begin(), orbit.end()) == v)
      out.push_back(v);
  });
  return out;
}

std::uint64_t brute_force_orbit_count(const PermutationGroup& group, const BoxConstraint& box) {
  return brute_force_canonicals(group, box).size();
}

} // namespace orbitgen
