// Test-side oracles. Deliberately independent of the library: permutations
// are plain image vectors and groups are explicit element sets.
#ifndef ORBITGEN_TESTS_SUPPORT_HPP
#define ORBITGEN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "orbitgen/group.hpp"
#include "orbitgen/integer_vector.hpp"

namespace oracle {

using Images = std::vector<int>;

inline Images raw_compose(const Images& p, const Images& q) {
  Images r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x)
    r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

inline Images raw_inverse(const Images& p) {
  Images r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

// sigma.(v_1..v_n) = (v_{sigma^-1(1)}, ..., v_{sigma^-1(n)})
inline std::vector<int> raw_act(const Images& sigma, const std::vector<int>& v) {
  const auto inv = raw_inverse(sigma);
  std::vector<int> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = v[static_cast<std::size_t>(inv[i])];
  return r;
}

inline std::vector<int> entries(const orbitgen::IntegerVector& v) { return {v.begin(), v.end()}; }

inline Images images(const orbitgen::Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Every element, by closure under left multiplication with the generators.
inline std::set<Images> closure(const std::vector<Images>& gens, std::size_t n) {
  Images id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto y = raw_compose(g, x);
      if (seen.insert(y).second)
        frontier.push_back(std::move(y));
    }
  }
  return seen;
}

inline std::set<Images> closure(const orbitgen::PermutationGroup& g) {
  std::vector<Images> gens;
  for (const auto& p : g.generators())
    gens.push_back(images(p));
  return closure(gens, g.degree());
}

inline std::set<Images> symmetric_elements(std::size_t n) {
  std::set<Images> all;
  Images p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    all.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

inline std::set<std::vector<int>> orbit(const std::set<Images>& group, const std::vector<int>& v) {
  std::set<std::vector<int>> out;
  for (const auto& g : group)
    out.insert(raw_act(g, v));
  return out;
}

inline std::vector<int> orbit_max(const std::set<Images>& group, const std::vector<int>& v) {
  return *orbit(group, v).rbegin();
}

inline bool is_orbit_max(const std::set<Images>& group, const std::vector<int>& v) {
  return orbit_max(group, v) == v;
}

// Every vector of length n with entries in 0..bound, last coordinate fastest.
inline void for_each_vector(std::size_t n, int bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(n, 0);
  while (true) {
    f(v);
    std::size_t k = n;
    while (k > 0 && v[k - 1] == bound)
      v[--k] = 0;
    if (k == 0)
      return;
    ++v[k - 1];
  }
}

inline int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline orbitgen::IntegerVector vec(const std::vector<int>& v) {
  return orbitgen::IntegerVector(std::vector<orbitgen::IntegerVector::value_type>(v.begin(), v.end()));
}

} // namespace oracle

#endif // ORBITGEN_TESTS_SUPPORT_HPP
