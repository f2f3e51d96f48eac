#ifndef ORBITGEN_PERMUTATION_HPP
#define ORBITGEN_PERMUTATION_HPP

#include <cstddef>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitgen/integer_vector.hpp"

namespace orbitgen {

/// A bijection of {0..n-1}. Stored as the image array; all text I/O uses
/// 1-based cycle notation.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// Builds from 0-based images; throws std::invalid_argument unless the
  /// images form a bijection of {0..n-1}.
  static Permutation from_images(std::vector<int> images);

  /// Builds from 1-based images, e.g. {2,3,1} for (1,2,3).
  static Permutation from_images_one_based(const std::vector<int>& images);

  std::size_t degree() const { return images_.size(); }

  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }

  std::span<const int> images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  // Cycle notation over 1-based points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  friend Permutation compose(const Permutation& p, const Permutation& q);

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// (p * q)(x) = p(q(x)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Position action: result[p(j)] = v[j], i.e. result_i = v_{p^-1(i)}.
/// act(p, act(q, v)) == act(compose(p, q), v).
IntegerVector act(const Permutation& p, const IntegerVector& v);

/// act() writing into a preallocated buffer of the same length.
void act_into(const Permutation& p, const IntegerVector& v, IntegerVector& out);

/// Parses a product of disjoint cycles such as "(1,2,3)(4,5)" over {1..n}.
/// "()" is the identity. Errors name the offending token.
Permutation parse_permutation(std::string_view text, std::size_t n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace orbitgen

#endif // ORBITGEN_PERMUTATION_HPP
