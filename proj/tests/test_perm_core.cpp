#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "orbitgen/catalog.hpp"
#include "orbitgen/group.hpp"
#include "orbitgen/group_io.hpp"
#include "orbitgen/limits.hpp"
#include "support.hpp"

using namespace orbitgen;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

} // namespace

TEST_CASE("parse_permutation") {
  CHECK(parse_permutation("()", 3) == Permutation::identity(3));
  CHECK(parse_permutation("(1,2,3)", 3) == Permutation::from_images_one_based({2, 3, 1}));
  CHECK(parse_permutation("(1,2)(3,4)", 5) == Permutation::from_images_one_based({2, 1, 4, 3, 5}));
  CHECK(parse_permutation(" ( 1, 2 ) ", 2) == Permutation::from_images_one_based({2, 1}));

  SUBCASE("errors name the offending token") {
    auto message = [](std::string_view text, std::size_t n) {
      try {
        parse_permutation(text, n);
      } catch (const std::invalid_argument& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message("(1,4)", 3).find("'4'") != std::string::npos);
    CHECK(message("(1,2)(2,3)", 3).find("'2'") != std::string::npos);
    CHECK(message("(1,x)", 3).find("'x'") != std::string::npos);
    CHECK(message("(1,2", 3) != "no error");
    CHECK(message("1,2)", 3) != "no error");
    CHECK(message("(0,1)", 3) != "no error");
  }
}

TEST_CASE("to_string renders 1-based cycles") {
  CHECK(Permutation::identity(4).to_string() == "()");
  CHECK(parse_permutation("(1,2,3)(4,5)", 5).to_string() == "(1,2,3)(4,5)");
  CHECK(parse_permutation("(3,1)", 3).to_string() == "(1,3)");
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 2}), std::invalid_argument);
}

TEST_CASE("act") {
  const IntegerVector v{2, 1, 0};
  CHECK(act(Permutation::identity(3), v) == v);
  const auto sigma = parse_permutation("(1,2,3)", 3);
  CHECK(act(sigma, v) == IntegerVector{0, 2, 1});
  CHECK(act(sigma, act(sigma, v)) == act(parse_permutation("(1,3,2)", 3), v));
  CHECK(act(parse_permutation("(1,3,2)", 3), v) == IntegerVector{1, 0, 2});
  CHECK_THROWS_AS(act(sigma, IntegerVector{1, 2}), std::invalid_argument);
}

TEST_CASE("action compatibility on random triples") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto sigma = random_permutation(n, rng);
    const auto tau = random_permutation(n, rng);
    std::vector<IntegerVector::value_type> entries(n);
    for (auto& x : entries)
      x = static_cast<int>(rng() % 5);
    const IntegerVector v(entries);
    REQUIRE(act(sigma, act(tau, v)) == act(compose(sigma, tau), v));
    // against the defining formula
    REQUIRE(oracle::entries(act(sigma, v)) == oracle::raw_act(oracle::images(sigma), oracle::entries(v)));
    REQUIRE(compose(sigma, sigma.inverse()).is_identity());
  }
}

TEST_CASE("schreier_sims examples") {
  CHECK(symmetric(3).order() == 6);

  const auto c5 = cyclic(5);
  CHECK(c5.order() == 5);
  CHECK(c5.chain().transversal(0).size() == 5);
  for (std::size_t i = 1; i < 5; ++i)
    CHECK(c5.chain().transversal(i).size() == 1);

  const PermutationGroup f20(5, {parse_permutation("(1,2,3,4,5)", 5), parse_permutation("(2,3,5,4)", 5)});
  CHECK(f20.order() == 20);
  CHECK(f20.order() == oracle::closure(f20).size());
}

TEST_CASE("chain structure for bundled groups") {
  for (const auto& [name, group] : bundled_groups(6)) {
    CAPTURE(name);
    const auto& chain = group.chain();
    const std::size_t n = group.degree();
    BigInt product = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto t = chain.transversal(i);
      const auto orbit = chain.orbit(i);
      product *= t.size();
      REQUIRE(t.size() == orbit.size());
      REQUIRE(t[0].is_identity());
      for (std::size_t k = 0; k < t.size(); ++k) {
        for (std::size_t j = 0; j < i; ++j)
          REQUIRE(t[k](static_cast<int>(j)) == static_cast<int>(j));
        // t_b brings b back to the base point i
        REQUIRE(t[k](orbit[k]) == static_cast<int>(i));
        REQUIRE(group.contains(t[k]));
      }
    }
    CHECK(chain.transversal(n - 1).size() == 1);
    CHECK(product == group.order());
    CHECK(group.order() == oracle::closure(group).size());
  }
}

TEST_CASE("contains agrees with brute force") {
  for (const auto& [name, group] : bundled_groups(5)) {
    CAPTURE(name);
    const auto elements = oracle::closure(group);
    for (const auto& p : oracle::symmetric_elements(group.degree()))
      REQUIRE(group.contains(Permutation::from_images(p)) == elements.contains(p));
  }
  CHECK_FALSE(alternating(3).contains(parse_permutation("(1,2)", 3)));
  CHECK(cyclic(4).contains(Permutation::identity(4)));
  CHECK_THROWS_AS(cyclic(4).contains(Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("random subgroups of S_6 and S_7") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 6 + trial % 2;
    std::vector<Permutation> gens;
    for (std::size_t k = 0, m = 1 + rng() % 2; k < m; ++k)
      gens.push_back(random_permutation(n, rng));
    const PermutationGroup g(n, gens);
    const auto elements = oracle::closure(g);
    REQUIRE(g.order() == elements.size());
    for (int probe = 0; probe < 50; ++probe) {
      const auto p = random_permutation(n, rng);
      REQUIRE(g.contains(p) == elements.contains(oracle::images(p)));
    }
  }
}

TEST_CASE("elements") {
  std::set<oracle::Images> seen;
  std::size_t count = 0;
  for (const auto& p : symmetric(4).elements()) {
    ++count;
    seen.insert(oracle::images(p));
  }
  CHECK(count == 24);
  CHECK(seen.size() == 24);

  for (const auto& [name, group] : bundled_groups(5)) {
    CAPTURE(name);
    std::set<oracle::Images> listed;
    for (const auto& p : group.elements())
      listed.insert(oracle::images(p));
    CHECK(listed == oracle::closure(group));
  }
}

TEST_CASE("orbit_of_vector") {
  const auto c3 = cyclic(3);
  const auto orbit = orbit_of_vector(c3, {1, 1, 0});
  CHECK(std::set<IntegerVector>(orbit.begin(), orbit.end()) ==
        std::set<IntegerVector>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(orbit.front() == IntegerVector{1, 1, 0});
  CHECK(orbit_of_vector(symmetric(4), {2, 2, 2, 2}).size() == 1);
  CHECK(orbit_of_vector(c3, {2, 1, 0}).size() == 3);

  SUBCASE("orbit-stabilizer") {
    std::mt19937 rng(3);
    for (const auto& [name, group] : bundled_groups(6)) {
      const auto elements = oracle::closure(group);
      for (int k = 0; k < 20; ++k) {
        std::vector<int> v(group.degree());
        for (auto& x : v)
          x = static_cast<int>(rng() % 3);
        const auto o = orbit_of_vector(group, oracle::vec(v));
        REQUIRE(o.size() == oracle::orbit(elements, v).size());
        REQUIRE(group.order() % o.size() == 0);
      }
    }
  }
}

TEST_CASE("set_stabilizer_of_orbit") {
  CHECK(set_stabilizer_of_orbit(alternating(3), {2, 1, 0}, 3).order() == 3);
  CHECK(set_stabilizer_of_orbit(alternating(3), {2, 1, 0}, 3).is_subgroup_of(alternating(3)));
  CHECK(set_stabilizer_of_orbit(cyclic(4), {0, 0, 0, 0}, 4).order() == 24);
  CHECK(set_stabilizer_of_orbit(trivial_group(2), {1, 0}, 2).order() == 1);

  SUBCASE("contains G and matches brute force") {
    std::mt19937 rng(11);
    for (const auto& [name, group] : bundled_groups(5)) {
      CAPTURE(name);
      const auto elements = oracle::closure(group);
      for (int k = 0; k < 5; ++k) {
        std::vector<int> v(group.degree());
        for (auto& x : v)
          x = static_cast<int>(rng() % 3);
        const auto stab = set_stabilizer_of_orbit(group, oracle::vec(v), group.degree());
        REQUIRE(group.is_subgroup_of(stab));
        const auto orbit = oracle::orbit(elements, v);
        std::size_t expected = 0;
        for (const auto& tau : oracle::symmetric_elements(group.degree())) {
          bool ok = true;
          for (const auto& w : orbit)
            ok = ok && orbit.contains(oracle::raw_act(tau, w));
          expected += ok;
        }
        REQUIRE(stab.order() == expected);
      }
    }
  }

  SUBCASE("warns above the desk bound") {
    auto saved = desk_limits();
    auto lowered = saved;
    lowered.brute_force_max_degree = 2;
    set_desk_limits(lowered);
    std::vector<std::string> warnings;
    set_warning_sink([&](std::string_view m) { warnings.emplace_back(m); });
    // the orbit {e1, e2, e3} is preserved by all of S3
    CHECK(set_stabilizer_of_orbit(cyclic(3), {1, 0, 0}, 3).order() == 6);
    set_warning_sink(nullptr);
    set_desk_limits(saved);
    CHECK(warnings.size() == 1);
  }
}

TEST_CASE("intersection") {
  const auto s3 = symmetric(3);
  CHECK(intersection(s3, s3).order() == 6);
  CHECK(intersection(s3, alternating(3)).order() == 3);
  CHECK(intersection(PermutationGroup(3, {parse_permutation("(1,2)", 3)}), cyclic(3)).order() == 1);
  CHECK_THROWS_AS(intersection(s3, symmetric(4)), std::invalid_argument);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5;
    const PermutationGroup a(n, {random_permutation(n, rng)});
    const PermutationGroup b(n, {random_permutation(n, rng), random_permutation(n, rng)});
    const auto ea = oracle::closure(a);
    const auto eb = oracle::closure(b);
    std::size_t both = 0;
    for (const auto& x : ea)
      both += eb.contains(x);
    REQUIRE(intersection(a, b).order() == both);
  }
}

TEST_CASE("catalog") {
  CHECK(cyclic(5).order() == 5);
  CHECK(dihedral(5).order() == 10);
  CHECK(frobenius_20().order() == 20);
  CHECK(alternating(5).order() == 60);
  CHECK(symmetric(5).order() == 120);
  CHECK(cyclic(1).order() == 1);
  CHECK(dihedral(3).order() == symmetric(3).order());
  CHECK(oracle::closure(dihedral(3)).size() == 6);
  CHECK(oracle::closure(dihedral(6)).size() == 12);
  CHECK(oracle::closure(alternating(6)).size() == 360);

  CHECK(named_group("cyclic7")->order() == 7);
  CHECK(named_group("pairs4")->degree() == 6);
  CHECK(named_group("trivial3")->order() == 1);
  CHECK(named_group("frobenius20")->order() == 20);
  CHECK_FALSE(named_group("mathieu11").has_value());
  CHECK_THROWS(named_group("cyclic0"));

  const auto five = transitive_degree5();
  REQUIRE(five.size() == 5);
  const int orders[] = {5, 10, 20, 60, 120};
  for (std::size_t k = 0; k < 5; ++k)
    CHECK(five[k].group.order() == orders[k]);
}

TEST_CASE("group constructor") {
  CHECK_THROWS_AS(PermutationGroup(0), std::invalid_argument);
  CHECK_THROWS_AS(PermutationGroup(3, {Permutation::identity(4)}), std::invalid_argument);
  const PermutationGroup g(3, {Permutation::identity(3), parse_permutation("(1,2)", 3),
                               parse_permutation("(1,2)", 3)});
  CHECK(g.generators().size() == 1);
  CHECK(PermutationGroup(4).order() == 1);
}

TEST_CASE("group file text") {
  const auto g = parse_group_text("# Frobenius group\n\ndegree 5\n(1,2,3,4,5)\n(2,3,5,4)\n");
  CHECK(g.degree() == 5);
  CHECK(g.order() == 20);
  CHECK(parse_group_text(format_group_text(g)).order() == 20);
  CHECK(parse_group_text("degree 4\n").order() == 1);

  auto message = [](std::string_view text) {
    try {
      parse_group_text(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("(1,2)\n").find("line 1") != std::string::npos);
  CHECK(message("degree 3\n(1,2)\n(1,5)\n").find("line 3") != std::string::npos);
  CHECK(message("") != "no error");
  CHECK_THROWS_AS(load_group_file("/nonexistent/group.txt"), std::runtime_error);
}
