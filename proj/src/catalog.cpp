#include "orbitgen/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "orbitgen/graphs.hpp"

namespace orbitgen {

namespace {

Permutation cycle_of(std::vector<int> one_based_points, std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<int>(i);
  for (std::size_t k = 0; k < one_based_points.size(); ++k)
    images[static_cast<std::size_t>(one_based_points[k] - 1)] =
        one_based_points[(k + 1) % one_based_points.size()] - 1;
  return Permutation::from_images(std::move(images));
}

Permutation full_cycle(std::size_t n) {
  std::vector<int> points(n);
  for (std::size_t i = 0; i < n; ++i)
    points[i] = static_cast<int>(i + 1);
  return cycle_of(std::move(points), n);
}

} // namespace

PermutationGroup trivial_group(std::size_t n) { return PermutationGroup::trivial(n); }

PermutationGroup cyclic(std::size_t n) { return PermutationGroup(n, {full_cycle(n)}); }

PermutationGroup dihedral(std::size_t n) {
  std::vector<int> reflection(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<int>(n - 1 - i);
  return PermutationGroup(n, {full_cycle(n), Permutation::from_images(std::move(reflection))});
}

PermutationGroup symmetric(std::size_t n) {
  if (n < 2)
    return PermutationGroup(n);
  return PermutationGroup(n, {full_cycle(n), cycle_of({1, 2}, n)});
}

PermutationGroup alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k)
    gens.push_back(cycle_of({1, 2, static_cast<int>(k)}, n));
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup frobenius_20() {
  return PermutationGroup(5, {cycle_of({1, 2, 3, 4, 5}, 5), cycle_of({2, 3, 5, 4}, 5)});
}

std::optional<PermutationGroup> named_group(std::string_view name) {
  if (name == "frobenius20")
    return frobenius_20();

  struct Family {
    std::string_view prefix;
    PermutationGroup (*make)(std::size_t);
    std::size_t min_n;
  };
  static const Family families[] = {
      {"trivial", trivial_group, 1}, {"cyclic", cyclic, 1},           {"dihedral", dihedral, 1},
      {"symmetric", symmetric, 1},   {"alternating", alternating, 1}, {"pairs", pair_action_group, 2},
  };
  for (const auto& family : families) {
    if (!name.starts_with(family.prefix))
      continue;
    auto digits = name.substr(family.prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
      return std::nullopt;
    if (n < family.min_n)
      throw std::invalid_argument("group '" + std::string(name) + "': parameter must be at least " +
                                  std::to_string(family.min_n));
    return family.make(n);
  }
  return std::nullopt;
}

std::vector<NamedGroup> bundled_groups(std::size_t max_degree) {
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    out.push_back({"trivial" + std::to_string(n), trivial_group(n)});
    out.push_back({"cyclic" + std::to_string(n), cyclic(n)});
    out.push_back({"dihedral" + std::to_string(n), dihedral(n)});
    out.push_back({"alternating" + std::to_string(n), alternating(n)});
    out.push_back({"symmetric" + std::to_string(n), symmetric(n)});
    if (n == 5)
      out.push_back({"frobenius20", frobenius_20()});
  }
  for (std::size_t nodes = 3; nodes * (nodes - 1) / 2 <= max_degree; ++nodes)
    out.push_back({"pairs" + std::to_string(nodes), pair_action_group(nodes)});
  return out;
}

std::vector<NamedGroup> transitive_degree5() {
  return {{"cyclic5", cyclic(5)},
          {"dihedral5", dihedral(5)},
          {"frobenius20", frobenius_20()},
          {"alternating5", alternating(5)},
          {"symmetric5", symmetric(5)}};
}

} // namespace orbitgen
