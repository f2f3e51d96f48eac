#include <doctest.h>

#include "orbitgen/catalog.hpp"
#include "orbitgen/enum_tree.hpp"
#include "orbitgen/graphs.hpp"
#include "orbitgen/limits.hpp"
#include "orbitgen/oracle.hpp"
#include "support.hpp"

using namespace orbitgen;

namespace {

using Exponents = std::map<std::size_t, std::size_t>;

Rational coefficient_of(const std::vector<CycleIndexMonomial>& index, const Exponents& e) {
  for (const auto& m : index)
    if (m.exponents == e)
      return m.coefficient;
  return 0;
}

} // namespace

TEST_CASE("cycle_index examples") {
  const auto s3 = cycle_index(symmetric(3));
  CHECK(s3.size() == 3);
  CHECK(coefficient_of(s3, {{1, 3}}) == Rational(1, 6));
  CHECK(coefficient_of(s3, {{1, 1}, {2, 1}}) == Rational(1, 2));
  CHECK(coefficient_of(s3, {{3, 1}}) == Rational(1, 3));
  CHECK(to_string(s3) == "1/2*a1*a2 + 1/6*a1^3 + 1/3*a3");

  const auto t = cycle_index(trivial_group(4));
  REQUIRE(t.size() == 1);
  CHECK(t[0].exponents == Exponents{{1, 4}});
  CHECK(t[0].coefficient == 1);

  const auto c3 = cycle_index(cyclic(3));
  CHECK(coefficient_of(c3, {{1, 3}}) == Rational(1, 3));
  CHECK(coefficient_of(c3, {{3, 1}}) == Rational(2, 3));
}

TEST_CASE("cycle_index is a probability distribution over cycle types") {
  for (const auto& [name, group] : bundled_groups(6)) {
    CAPTURE(name);
    Rational total = 0;
    for (const auto& m : cycle_index(group)) {
      std::size_t points = 0;
      for (const auto& [k, mk] : m.exponents)
        points += k * mk;
      REQUIRE(points == group.degree());
      total += m.coefficient;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("cycle_index respects the element bound") {
  auto saved = desk_limits();
  auto lowered = saved;
  lowered.element_stream_max = 10;
  set_desk_limits(lowered);
  CHECK_THROWS_AS(cycle_index(symmetric(4)), LimitExceeded);
  set_desk_limits(saved);
}

TEST_CASE("burnside_count examples") {
  CHECK(burnside_count(cyclic(3), 1) == 4);
  CHECK(burnside_count(pair_action_group(5), 1) == 34);
  for (const auto& [name, group] : bundled_groups(4))
    CHECK(burnside_count(group, 0) == 1);
  CHECK(burnside_count(cyclic(3), std::nullopt, 3) == 4);
  CHECK(burnside_count(cyclic(3), 1, 5) == 0);
  CHECK_THROWS_AS(burnside_count(cyclic(3), std::nullopt), std::invalid_argument);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_orbit_count(cyclic(5), BoxConstraint::staircase(5)) == 71);
  CHECK(brute_force_orbit_count(trivial_group(3), {.max_part = 2}) == 27);
  CHECK(brute_force_orbit_count(trivial_group(4), BoxConstraint::staircase(4)) == 23);
  CHECK(brute_force_canonicals(cyclic(3), {.degree = 3}) ==
        std::vector<IntegerVector>{{1, 1, 1}, {2, 0, 1}, {2, 1, 0}, {3, 0, 0}});
}

TEST_CASE("box iteration") {
  std::vector<IntegerVector> seen;
  for_each_box_vector(2, {.max_part = 1}, [&](const IntegerVector& v) { seen.push_back(v); });
  CHECK(seen == std::vector<IntegerVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  std::size_t count = 0;
  for_each_box_vector(3, {.max_part = 3, .degree = 2}, [&](const IntegerVector& v) {
    CHECK(v.degree() == 2);
    ++count;
  });
  CHECK(count == 6);
  CHECK_THROWS_AS(brute_force_orbit_count(cyclic(3), {}), std::invalid_argument);
}

TEST_CASE("burnside = brute force = orderly count") {
  for (const auto& [name, group] : bundled_groups(5)) {
    CAPTURE(name);
    const auto elements = oracle::closure(group);
    for (std::int64_t p = 0; p <= 3; ++p) {
      // test-side orbit count
      std::set<std::vector<int>> reps;
      oracle::for_each_vector(group.degree(), static_cast<int>(p),
                              [&](const std::vector<int>& v) { reps.insert(oracle::orbit_max(elements, v)); });
      REQUIRE(burnside_count(group, p) == reps.size());
      REQUIRE(brute_force_orbit_count(group, {.max_part = p}) == reps.size());
      REQUIRE(count_canonicals(GenerationConfig::with_max_part(group, static_cast<int>(p))) == reps.size());
      for (std::int64_t d = 0; d <= 6; ++d) {
        const auto b = burnside_count(group, p, d);
        REQUIRE(b == brute_force_orbit_count(group, {.max_part = p, .degree = d}));
        auto config = GenerationConfig::with_degree(group, d);
        config.max_part = static_cast<int>(p);
        REQUIRE(b == count_canonicals(config));
      }
    }
    for (std::int64_t d = 0; d <= 6; ++d)
      REQUIRE(burnside_count(group, std::nullopt, d) ==
              count_canonicals(GenerationConfig::with_degree(group, d)));
  }
}
