#include <doctest.h>

#include <random>

#include "orbitgen/catalog.hpp"
#include "orbitgen/invariants.hpp"
#include "orbitgen/limits.hpp"
#include "orbitgen/polynomial.hpp"
#include "support.hpp"

using namespace orbitgen;

namespace {

SparsePolynomial x(std::size_t n, std::size_t i) { return SparsePolynomial::variable(n, i); }

SparsePolynomial random_polynomial(std::size_t n, std::mt19937& rng) {
  SparsePolynomial p(n);
  for (int t = 0, terms = 1 + static_cast<int>(rng() % 4); t < terms; ++t) {
    std::vector<IntegerVector::value_type> e(n);
    for (auto& a : e)
      a = static_cast<int>(rng() % 3);
    p.add_term(IntegerVector(e), Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
  }
  return p;
}

} // namespace

TEST_CASE("polynomial arithmetic and rendering") {
  const auto x1 = x(3, 0), x2 = x(3, 1), x3 = x(3, 2);
  CHECK(SparsePolynomial(3).to_string() == "0");
  CHECK(SparsePolynomial::constant(3, 1).to_string() == "1");
  CHECK((x1 * x1 * x2 * Rational(2) + x3 * Rational(1, 3) - SparsePolynomial::constant(3, 5)).to_string() ==
        "2*x1^2*x2 + 1/3*x3 - 5");
  CHECK((x1 - x1).is_zero());
  CHECK((x1 + x2).term_count() == 2);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK((x1 * Rational(0)).is_zero());
  CHECK((x1 * Rational(-1)).to_string() == "-x1");
  CHECK_THROWS_AS(x1 + x(2, 0), std::invalid_argument);
}

TEST_CASE("action on polynomials") {
  const auto sigma = parse_permutation("(1,2,3)", 3);
  // sigma sends x_i to x_{sigma(i)}
  CHECK(act(sigma, x(3, 0)) == x(3, 1));
  CHECK(act(sigma, SparsePolynomial::monomial({2, 1, 0})) == SparsePolynomial::monomial({0, 2, 1}));

  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<int> a(n), b(n);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const auto s = Permutation::from_images(a);
    const auto t = Permutation::from_images(b);
    const auto p = random_polynomial(n, rng);
    const auto q = random_polynomial(n, rng);
    REQUIRE(act(s, p * q) == act(s, p) * act(s, q));
    REQUIRE(act(s, p + q) == act(s, p) + act(s, q));
    REQUIRE(act(s, act(t, p)) == act(compose(s, t), p));
  }
}

TEST_CASE("orbit_sum") {
  const auto c3 = cyclic(3);
  CHECK(orbit_sum(c3, {2, 1, 0}) ==
        SparsePolynomial::monomial({2, 1, 0}) + SparsePolynomial::monomial({0, 2, 1}) +
            SparsePolynomial::monomial({1, 0, 2}));
  CHECK(orbit_sum(c3, {2, 1, 0}).to_string() == "x1^2*x2 + x1*x3^2 + x2^2*x3");
  CHECK(orbit_sum(symmetric(4), {0, 0, 0, 0}) == SparsePolynomial::constant(4, 1));
  CHECK(orbit_sum(symmetric(2), {1, 0}) == x(2, 0) + x(2, 1));
}

TEST_CASE("reynolds") {
  CHECK(reynolds(symmetric(2), x(2, 0)) == (x(2, 0) + x(2, 1)) * Rational(1, 2));
  const auto c3 = cyclic(3);
  CHECK(reynolds(c3, SparsePolynomial::monomial({2, 1, 0})) == orbit_sum(c3, {2, 1, 0}) * Rational(1, 3));
  const auto inv = orbit_sum(c3, {1, 1, 0});
  CHECK(reynolds(c3, inv) == inv);

  std::mt19937 rng(4);
  for (const auto& [name, group] : bundled_groups(5)) {
    const auto p = random_polynomial(group.degree(), rng);
    const auto r = reynolds(group, p);
    REQUIRE(is_invariant(group, r));
    REQUIRE(reynolds(group, r) == r);
  }

  auto saved = desk_limits();
  auto lowered = saved;
  lowered.element_stream_max = 5;
  set_desk_limits(lowered);
  CHECK_THROWS_AS(reynolds(symmetric(3), x(3, 0)), LimitExceeded);
  set_desk_limits(saved);
}

TEST_CASE("is_invariant") {
  for (const auto& [name, group] : bundled_groups(4)) {
    IntegerVector a(group.degree());
    a[0] = 2;
    CHECK(is_invariant(group, orbit_sum(group, a)));
  }
  CHECK_FALSE(is_invariant(symmetric(2), x(2, 0)));
  const auto e1 = x(3, 0) + x(3, 1) + x(3, 2);
  for (const auto& [name, group] : bundled_groups(3))
    if (group.degree() == 3)
      CHECK(is_invariant(group, e1));
}

TEST_CASE("polynomial_stabilizer_bruteforce") {
  for (std::size_t n = 1; n <= 5; ++n) {
    SparsePolynomial e1(n);
    for (std::size_t i = 0; i < n; ++i)
      e1 += x(n, i);
    CHECK(polynomial_stabilizer_bruteforce(e1, n).order() == symmetric(n).order());
    BigInt fact = 1;
    for (std::size_t k = 2; k < n; ++k)
      fact *= k;
    CHECK(polynomial_stabilizer_bruteforce(x(n, 0), n).order() == fact);
  }
  const auto a3 = polynomial_stabilizer_bruteforce(orbit_sum(alternating(3), {2, 1, 0}), 3);
  CHECK(a3.order() == 3);
  CHECK(alternating(3).is_subgroup_of(a3));

  auto saved = desk_limits();
  auto lowered = saved;
  lowered.brute_force_max_degree = 3;
  set_desk_limits(lowered);
  CHECK_THROWS_AS(polynomial_stabilizer_bruteforce(x(4, 0), 4), LimitExceeded);
  set_desk_limits(saved);
}

TEST_CASE("orbit sums: stabilizer contains G, term count times stabilizer order is |G|") {
  std::mt19937 rng(12);
  for (const auto& [name, group] : bundled_groups(5)) {
    CAPTURE(name);
    const auto elements = oracle::closure(group);
    for (int k = 0; k < 6; ++k) {
      std::vector<int> a(group.degree());
      for (auto& e : a)
        e = static_cast<int>(rng() % 3);
      const auto p = orbit_sum(group, oracle::vec(a));
      REQUIRE(is_invariant(group, p));
      REQUIRE(group.is_subgroup_of(polynomial_stabilizer_bruteforce(p, group.degree())));
      std::size_t fixing = 0;
      for (const auto& g : elements)
        fixing += oracle::raw_act(g, a) == a;
      REQUIRE(p.term_count() * fixing == group.order());
    }
  }
}
