#ifndef ORBITGEN_ENUM_TREE_HPP
#define ORBITGEN_ENUM_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "orbitgen/group.hpp"
#include "orbitgen/integer_vector.hpp"
#include "orbitgen/stats.hpp"

namespace orbitgen {

// ---------------------------------------------------------------------------
// The generation tree over N^n rooted at (0,...,0).

/// Decrements the last non-zero entry. Throws std::invalid_argument on the root.
IntegerVector father(const IntegerVector& v);

/// With i the last non-zero position (the first position for the root):
/// v + e_i, then v + e_j for every j > i, in that order.
std::vector<IntegerVector> children(const IntegerVector& v);

std::size_t child_count(const IntegerVector& v);

/// The k-th entry of children(v), without building the others.
IntegerVector child(const IntegerVector& v, std::size_t k);

// ---------------------------------------------------------------------------

enum class GenerationMode {
  by_degree,    // only vectors of degree == degree
  up_to_degree, // every degree 0..degree
  all,          // every vector within max_part / ceiling
};

enum class Traversal { breadth_first, depth_first };

struct GenerationConfig {
  PermutationGroup group;
  GenerationMode mode = GenerationMode::all;
  std::optional<std::int64_t> degree;
  std::optional<IntegerVector::value_type> max_part;
  std::optional<IntegerVector> ceiling;
  // Depth-first is only available for by_degree.
  Traversal traversal = Traversal::breadth_first;
  bool collect_stats = false;

  static GenerationConfig with_degree(PermutationGroup group, std::int64_t d);
  static GenerationConfig up_to(PermutationGroup group, std::int64_t d);
  static GenerationConfig with_max_part(PermutationGroup group, IntegerVector::value_type p);
  /// Componentwise v_i <= n - i (1-based), the staircase (n-1,...,1,0)
  /// itself excluded: the n! - 1 vectors strictly under it (just the root
  /// for n = 1).
  static GenerationConfig staircase(PermutationGroup group);

  /// Throws std::invalid_argument when the configuration is not finite or
  /// inconsistent.
  void validate() const;

  /// Largest degree the traversal may reach.
  std::int64_t degree_limit() const;

  /// Upper bound on entry i from max_part and ceiling (nullopt: unbounded).
  std::optional<IntegerVector::value_type> entry_bound(std::size_t i) const;

  bool admits(const IntegerVector& v) const;
};

/// Number of vectors strictly below v in the generation tree that satisfy
/// the constraints and the degree limit of `config`. Saturates at UINT64_MAX.
std::uint64_t count_descendants(const IntegerVector& v, const GenerationConfig& config);

/// Lazy orderly generation: yields exactly one vector (the lexicographic
/// maximum) per orbit meeting the constraints.
///
/// Breadth-first keeps only the canonicals of the previous degree and
/// yields degrees in increasing order. Depth-first (by_degree only) keeps a
/// stack of at most d+1 nodes. Children of a vector that failed the test are
/// never generated; children outside the constraints are dropped untested.
class CanonicalEnumerator {
public:
  explicit CanonicalEnumerator(GenerationConfig config);

  std::optional<IntegerVector> next();

  /// Complete once next() has returned nullopt.
  const EnumStats& stats() const { return stats_; }

  class iterator {
  public:
    using value_type = IntegerVector;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(CanonicalEnumerator* owner) : owner_(owner) { ++*this; }
    const IntegerVector& operator*() const { return *current_; }
    const IntegerVector* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = owner_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

  private:
    CanonicalEnumerator* owner_ = nullptr;
    std::optional<IntegerVector> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  friend std::vector<IntegerVector> enumerate_canonicals_parallel(const GenerationConfig&, unsigned,
                                                                  EnumStats*);

  struct Frame {
    IntegerVector node;
    std::size_t next_child = 0;
  };

  bool yields_degree(std::int64_t d) const;
  // Runs the canonical test on an admissible vector, updating statistics.
  bool test(const IntegerVector& v);
  std::optional<IntegerVector> next_breadth_first();
  std::optional<IntegerVector> next_depth_first();

  GenerationConfig config_;
  std::int64_t limit_;
  EnumStats stats_;
  bool started_ = false;
  bool finished_ = false;

  // breadth-first state
  std::vector<IntegerVector> previous_;
  std::vector<IntegerVector> current_;
  std::size_t parent_ = 0;
  std::size_t next_child_ = 0;
  std::int64_t level_degree_ = 0;

  // depth-first state
  std::vector<Frame> stack_;
};

std::vector<IntegerVector> enumerate_canonicals(const GenerationConfig& config,
                                                EnumStats* stats = nullptr);

std::uint64_t count_canonicals(const GenerationConfig& config);

/// Breadth-first with each degree level split across `jobs` worker threads.
/// Output is sorted by (degree ascending, lexicographically descending);
/// statistics equal those of the sequential run.
std::vector<IntegerVector> enumerate_canonicals_parallel(const GenerationConfig& config,
                                                         unsigned jobs,
                                                         EnumStats* stats = nullptr);

} // namespace orbitgen

#endif // ORBITGEN_ENUM_TREE_HPP
