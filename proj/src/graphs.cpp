#include "orbitgen/graphs.hpp"

#include <stdexcept>
#include <string>

#include "orbitgen/catalog.hpp"
#include "orbitgen/enum_tree.hpp"
#include "orbitgen/limits.hpp"

namespace orbitgen {

namespace {

std::size_t pair_slot(int i, int j, std::size_t nodes) {
  if (i > j)
    std::swap(i, j);
  // pairs (a, *) for a < i come first
  const auto a = static_cast<std::size_t>(i);
  const auto b = static_cast<std::size_t>(j);
  return a * nodes - a * (a + 1) / 2 + (b - a - 1);
}

void check_nodes(std::size_t nodes) {
  if (nodes < 2)
    throw std::invalid_argument("graphs: need at least 2 nodes, got " + std::to_string(nodes));
  if (nodes > desk_limits().brute_force_max_degree)
    throw LimitExceeded("graphs: " + std::to_string(nodes) + " nodes is above the desk bound of " +
                        std::to_string(desk_limits().brute_force_max_degree));
}

} // namespace

std::vector<std::pair<int, int>> pair_index(std::size_t nodes) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j)
      out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Permutation induced_pair_permutation(const Permutation& node_permutation) {
  const std::size_t nodes = node_permutation.degree();
  const auto pairs = pair_index(nodes);
  std::vector<int> images(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    images[k] = static_cast<int>(pair_slot(node_permutation(i), node_permutation(j), nodes));
  }
  return Permutation::from_images(std::move(images));
}

PermutationGroup pair_action_group(std::size_t nodes) {
  if (nodes < 2)
    throw std::invalid_argument("pair_action_group: need at least 2 nodes, got " + std::to_string(nodes));
  const std::size_t degree = nodes * (nodes - 1) / 2;
  std::vector<Permutation> gens;
  const auto sn = symmetric(nodes);
  for (const auto& g : sn.generators())
    gens.push_back(induced_pair_permutation(g));
  return PermutationGroup(degree, std::move(gens));
}

std::uint64_t count_unlabeled_graphs(std::size_t nodes) {
  check_nodes(nodes);
  return count_canonicals(GenerationConfig::with_max_part(pair_action_group(nodes), 1));
}

std::vector<IntegerVector> enumerate_graphs(std::size_t nodes) {
  check_nodes(nodes);
  return enumerate_canonicals(GenerationConfig::with_max_part(pair_action_group(nodes), 1));
}

std::uint64_t count_multigraphs(std::size_t nodes, std::int64_t edges) {
  check_nodes(nodes);
  return count_canonicals(GenerationConfig::with_degree(pair_action_group(nodes), edges));
}

std::vector<IntegerVector> enumerate_multigraphs(std::size_t nodes, std::int64_t edges) {
  check_nodes(nodes);
  return enumerate_canonicals(GenerationConfig::with_degree(pair_action_group(nodes), edges));
}

std::string edge_bitstring(const IntegerVector& edges) {
  std::string out;
  out.reserve(edges.size());
  for (auto e : edges) {
    if (e > 1)
      throw std::invalid_argument("edge_bitstring: multiplicity " + std::to_string(e) + " above 1");
    out += e ? '1' : '0';
  }
  return out;
}

std::string edge_list(const IntegerVector& edges, std::size_t nodes) {
  const auto pairs = pair_index(nodes);
  if (pairs.size() != edges.size())
    throw std::invalid_argument("edge_list: vector length does not match the node count");
  std::string out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (int m = 0; m < edges[k]; ++m) {
      if (!out.empty())
        out += ' ';
      out += std::to_string(pairs[k].first + 1) + "-" + std::to_string(pairs[k].second + 1);
    }
  }
  return out;
}

} // namespace orbitgen
