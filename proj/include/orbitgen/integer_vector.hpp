#ifndef ORBITGEN_INTEGER_VECTOR_HPP
#define ORBITGEN_INTEGER_VECTOR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitgen {

/// A tuple of non-negative integers. Entries are indexed 0..n-1 internally;
/// the rendered form "a1,a2,...,an" is what the CLI reads and writes.
class IntegerVector {
public:
  using value_type = std::int32_t;

  IntegerVector() = default;
  explicit IntegerVector(std::size_t n) : entries_(n, 0) {}
  IntegerVector(std::initializer_list<value_type> entries);
  explicit IntegerVector(std::vector<value_type> entries);

  static IntegerVector zero(std::size_t n) { return IntegerVector(n); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }

  std::span<const value_type> entries() const { return entries_; }
  const value_type* data() const { return entries_.data(); }
  value_type* data() { return entries_.data(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Sum of entries.
  std::int64_t degree() const;

  bool is_zero() const;

  // 0-based position of the last non-zero entry, or -1 for the zero vector.
  int last_nonzero() const;

  std::string to_string() const;

  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
  friend std::strong_ordering operator<=>(const IntegerVector& a, const IntegerVector& b) {
    return a.entries_ <=> b.entries_;
  }

private:
  std::vector<value_type> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntegerVector& v);

/// Parses "a1,a2,...,an"; whitespace and one pair of enclosing parentheses
/// are tolerated. Throws std::invalid_argument naming the bad token.
IntegerVector parse_integer_vector(std::string_view text);

struct IntegerVectorHash {
  std::size_t operator()(const IntegerVector& v) const noexcept;
};

enum class PrefixOrder { less, equal_prefix, greater };

/// Lexicographic comparison of the first `length` coordinates (1 <= length <= n).
PrefixOrder prefix_compare(const IntegerVector& v, const IntegerVector& w, std::size_t length);

} // namespace orbitgen

#endif // ORBITGEN_INTEGER_VECTOR_HPP
