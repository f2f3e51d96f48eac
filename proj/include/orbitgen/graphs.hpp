#ifndef ORBITGEN_GRAPHS_HPP
#define ORBITGEN_GRAPHS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitgen/group.hpp"
#include "orbitgen/integer_vector.hpp"

namespace orbitgen {

/// Unordered pairs {i,j}, i < j, of {0..nodes-1} in lexicographic order:
/// (0,1), (0,2), ..., (nodes-2, nodes-1). Edge vectors index into this list.
std::vector<std::pair<int, int>> pair_index(std::size_t nodes);

/// The permutation induced on pair_index(nodes) by a node permutation.
Permutation induced_pair_permutation(const Permutation& node_permutation);

/// Induced action of S_nodes on pairs, of degree nodes(nodes-1)/2, generated
/// by the images of (1,...,n) and (1,2). Throws for nodes < 2.
PermutationGroup pair_action_group(std::size_t nodes);

/// Number of graphs on `nodes` unlabeled nodes. Throws LimitExceeded above
/// the brute-force degree bound.
std::uint64_t count_unlabeled_graphs(std::size_t nodes);

/// One canonical 0/1 edge vector per isomorphism class, breadth-first by
/// edge count.
std::vector<IntegerVector> enumerate_graphs(std::size_t nodes);

/// Multigraphs with exactly `edges` edges (parallel edges allowed).
std::uint64_t count_multigraphs(std::size_t nodes, std::int64_t edges);
std::vector<IntegerVector> enumerate_multigraphs(std::size_t nodes, std::int64_t edges);

/// "0110..." for a 0/1 edge vector.
std::string edge_bitstring(const IntegerVector& edges);

/// "1-2 1-3 ..." (1-based nodes), each pair repeated by its multiplicity.
std::string edge_list(const IntegerVector& edges, std::size_t nodes);

} // namespace orbitgen

#endif // ORBITGEN_GRAPHS_HPP
