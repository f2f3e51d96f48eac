#ifndef ORBITGEN_STATS_HPP
#define ORBITGEN_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "orbitgen/numeric.hpp"

namespace orbitgen {

/// Counters collected by an enumeration run.
struct EnumStats {
  std::size_t n = 0;
  BigInt group_order = 1;

  std::map<std::int64_t, std::uint64_t> canonicals_by_degree;
  std::uint64_t canonicals = 0; // every canonical found, yielded or not
  std::uint64_t tests = 0;      // calls to the canonical test, root included
  std::uint64_t skipped = 0;    // in-bounds vectors never tested because an ancestor failed
  std::uint64_t total_orbit_sizes = 0;
  std::uint64_t total_explored = 0; // explored counts of the tests that returned canonical
  std::int64_t max_degree = 0; // highest degree at which a vector was tested

  std::uint64_t tested_noncanonical() const { return tests - canonicals; }

  // (tests - canonicals) / canonicals
  double err() const;
  // total_explored / total_orbit_sizes
  double ratio() const;
  // total_explored / canonicals
  double complexity() const;

  /// min{ n(|G|-1)/(n+d), n-1 } with d = max_degree.
  double relative_error_bound() const;
  bool within_error_bound() const;

  void merge(const EnumStats& other);

  friend bool operator==(const EnumStats&, const EnumStats&) = default;
};

// Shortest round-trip decimal form.
std::string format_double(double x);

/// One-line "key=value" form used by the plain CLI output.
std::string stats_to_plain(const EnumStats& stats);

// CSV header and row for the scalar fields (canonicals_by_degree omitted).
std::string stats_csv_header();
std::string stats_to_csv_row(const EnumStats& stats);
EnumStats stats_from_csv_row(std::string_view row);

std::string stats_to_json(const EnumStats& stats);
EnumStats stats_from_json(std::string_view json);

} // namespace orbitgen

#endif // ORBITGEN_STATS_HPP
