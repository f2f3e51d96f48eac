#ifndef ORBITGEN_GROUP_HPP
#define ORBITGEN_GROUP_HPP

#include <cstddef>
#include <iterator>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "orbitgen/integer_vector.hpp"
#include "orbitgen/numeric.hpp"
#include "orbitgen/permutation.hpp"

namespace orbitgen {

/// Stabilizer chain G = G_0 >= G_1 >= ... >= G_n = {e} for the fixed base
/// 0,1,...,n-1, where G_i fixes points 0..i-1 pointwise.
///
/// Level i stores the orbit of point i under G_i and, for each orbit point
/// b, two representatives in G_i: `representative` u_b with u_b(i) = b, and
/// its inverse t_b = u_b^-1 with t_b(b) = i. The transversal T_{i+1} exposed
/// here (1-based as in the literature) is the list of t_b: acting on a
/// vector, t_b moves the entry at position b into position i. Every element
/// of G_i factors uniquely as g' * t_b with g' in G_{i+1}, which is what the
/// canonical test relies on.
class StrongGeneratingSet {
public:
  StrongGeneratingSet() = default;

  std::size_t degree() const { return levels_.size(); }

  /// t_b for every b in the orbit of point `level`, in orbit (BFS) order;
  /// the first entry is the identity.
  std::span<const Permutation> transversal(std::size_t level) const {
    return levels_[level].transversal;
  }

  /// u_b = t_b^-1, same order as transversal().
  std::span<const Permutation> representatives(std::size_t level) const {
    return levels_[level].representatives;
  }

  /// Orbit of point `level` under G_level, same order as transversal().
  std::span<const int> orbit(std::size_t level) const { return levels_[level].orbit; }

  /// Strong generators assigned to G_level.
  std::span<const Permutation> strong_generators(std::size_t level) const {
    return levels_[level].generators;
  }

  BigInt order() const;

  /// Sifts g through levels `from`..n-1. Returns the residue and the level
  /// at which sifting stopped (n when it ran through every level). g is a
  /// member iff the residue is the identity.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  bool contains(const Permutation& g) const;

private:
  friend StrongGeneratingSet schreier_sims(std::span<const Permutation> generators, std::size_t n);

  struct Level {
    std::vector<Permutation> generators;
    std::vector<int> orbit;
    std::vector<int> slot; // point -> index in orbit, or -1
    std::vector<Permutation> representatives;
    std::vector<Permutation> transversal;
  };

  void rebuild_level(std::size_t i);

  std::vector<Level> levels_;
};

/// Deterministic Schreier-Sims for the base 0..n-1. Transversal
/// representatives are BFS words over the level generators in input order.
StrongGeneratingSet schreier_sims(std::span<const Permutation> generators, std::size_t n);

class ElementRange;

/// A permutation group given by generators, with its stabilizer chain built
/// at construction. Immutable; copies share the chain.
class PermutationGroup {
public:
  /// Trivial group of degree n when `generators` is empty.
  explicit PermutationGroup(std::size_t degree, std::vector<Permutation> generators = {});

  static PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StrongGeneratingSet& chain() const { return *chain_; }

  const BigInt& order() const { return order_; }

  /// Exact membership by sifting. Throws on degree mismatch.
  bool contains(const Permutation& p) const;

  /// Every element exactly once, as products u_0 * u_1 * ... * u_{n-1} of
  /// chain representatives.
  ElementRange elements() const;

  /// The group generated by these generators plus `extra`.
  PermutationGroup with_generator(const Permutation& extra) const;

  /// True when every generator of this group lies in `other`.
  bool is_subgroup_of(const PermutationGroup& other) const;

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StrongGeneratingSet> chain_;
  BigInt order_;
};

class ElementRange {
public:
  class iterator {
  public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(std::shared_ptr<const StrongGeneratingSet> chain);

    const Permutation& operator*() const { return prefix_.back(); }
    const Permutation* operator->() const { return &prefix_.back(); }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

  private:
    void refresh_from(std::size_t level);

    std::shared_ptr<const StrongGeneratingSet> chain_;
    std::vector<std::size_t> digits_;
    std::vector<Permutation> prefix_; // prefix_[k] = u_0 * ... * u_k
    bool done_ = true;
  };

  explicit ElementRange(std::shared_ptr<const StrongGeneratingSet> chain) : chain_(std::move(chain)) {}

  iterator begin() const { return iterator(chain_); }
  std::default_sentinel_t end() const { return {}; }

private:
  std::shared_ptr<const StrongGeneratingSet> chain_;
};

/// G-orbit of v by closure under the generators, in discovery order (v first).
std::vector<IntegerVector> orbit_of_vector(const PermutationGroup& group, const IntegerVector& v);

/// { tau in S_n : tau maps the set orbit_of_vector(group, v) onto itself },
/// with the stabilizer taken in the full symmetric group on ambient_n points.
/// Brute force over S_n; warns when ambient_n exceeds the desk bound.
PermutationGroup set_stabilizer_of_orbit(const PermutationGroup& group, const IntegerVector& v,
                                         std::size_t ambient_n);

/// Streams the elements of the smaller group and sifts each through the
/// other's chain. Warns when the smaller order exceeds the desk bound.
PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b);

} // namespace orbitgen

#endif // ORBITGEN_GROUP_HPP
