#include "orbitgen/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "orbitgen/limits.hpp"

namespace orbitgen {

// ---------------------------------------------------------------------------
// StrongGeneratingSet

void StrongGeneratingSet::rebuild_level(std::size_t i) {
  const std::size_t n = levels_.size();
  Level& level = levels_[i];
  level.orbit.assign(1, static_cast<int>(i));
  level.slot.assign(n, -1);
  level.slot[i] = 0;
  level.representatives.assign(1, Permutation::identity(n));
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const int p = level.orbit[idx];
    for (const auto& s : level.generators) {
      const int q = s(p);
      if (level.slot[static_cast<std::size_t>(q)] >= 0)
        continue;
      level.slot[static_cast<std::size_t>(q)] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(q);
      level.representatives.push_back(compose(s, level.representatives[idx]));
    }
  }
  level.transversal.clear();
  level.transversal.reserve(level.representatives.size());
  for (const auto& u : level.representatives)
    level.transversal.push_back(u.inverse());
}

BigInt StrongGeneratingSet::order() const {
  BigInt order = 1;
  for (const auto& level : levels_)
    order *= level.orbit.size();
  return order;
}

std::pair<Permutation, std::size_t> StrongGeneratingSet::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int b = g(static_cast<int>(l));
    const int k = levels_[l].slot[static_cast<std::size_t>(b)];
    if (k < 0)
      return {std::move(g), l};
    if (k > 0)
      g = compose(levels_[l].transversal[static_cast<std::size_t>(k)], g);
  }
  return {std::move(g), levels_.size()};
}

bool StrongGeneratingSet::contains(const Permutation& g) const {
  if (g.degree() != degree())
    throw std::invalid_argument("contains: permutation of degree " + std::to_string(g.degree()) +
                                " tested against group of degree " + std::to_string(degree()));
  return sift(g).first.is_identity();
}

StrongGeneratingSet schreier_sims(std::span<const Permutation> generators, std::size_t n) {
  StrongGeneratingSet sgs;
  sgs.levels_.resize(n);

  for (const auto& g : generators) {
    if (g.degree() != n)
      throw std::invalid_argument("schreier_sims: generator " + g.to_string() + " has degree " +
                                  std::to_string(g.degree()) + ", expected " + std::to_string(n));
    if (g.is_identity())
      continue;
    std::size_t first_moved = 0;
    while (g(static_cast<int>(first_moved)) == static_cast<int>(first_moved))
      ++first_moved;
    for (std::size_t j = 0; j <= first_moved; ++j)
      sgs.levels_[j].generators.push_back(g);
  }
  for (std::size_t i = 0; i < n; ++i)
    sgs.rebuild_level(i);

  // Process levels bottom-up; a Schreier generator that fails to sift is
  // added to the levels it belongs to and processing resumes at the level
  // where it stopped.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1;
  while (i >= 0) {
    const auto level_index = static_cast<std::size_t>(i);
    bool restarted = false;
    const auto& level = sgs.levels_[level_index];
    for (std::size_t k = 0; k < level.orbit.size() && !restarted; ++k) {
      const int b = level.orbit[k];
      for (const auto& s : level.generators) {
        const int sb = s(b);
        const auto slot = static_cast<std::size_t>(level.slot[static_cast<std::size_t>(sb)]);
        // u_{s(b)}^-1 * s * u_b fixes point i
        Permutation schreier =
            compose(level.transversal[slot], compose(s, level.representatives[k]));
        auto [residue, stop] = sgs.sift(std::move(schreier), level_index + 1);
        if (residue.is_identity())
          continue;
        for (std::size_t l = level_index + 1; l <= stop && l < n; ++l) {
          sgs.levels_[l].generators.push_back(residue);
          sgs.rebuild_level(l);
        }
        i = static_cast<std::ptrdiff_t>(std::min(stop, n - 1));
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
  return sgs;
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree) {
  if (degree == 0)
    throw std::invalid_argument("permutation group degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.to_string() + " has degree " +
                                  std::to_string(g.degree()) + ", group degree is " +
                                  std::to_string(degree));
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  chain_ = std::make_shared<const StrongGeneratingSet>(schreier_sims(generators_, degree_));
  order_ = chain_->order();
}

bool PermutationGroup::contains(const Permutation& p) const { return chain_->contains(p); }

ElementRange PermutationGroup::elements() const { return ElementRange(chain_); }

PermutationGroup PermutationGroup::with_generator(const Permutation& extra) const {
  auto gens = generators_;
  gens.push_back(extra);
  return PermutationGroup(degree_, std::move(gens));
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (other.degree() != degree_)
    return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

// ---------------------------------------------------------------------------
// ElementRange

ElementRange::iterator::iterator(std::shared_ptr<const StrongGeneratingSet> chain)
    : chain_(std::move(chain)) {
  const std::size_t n = chain_->degree();
  digits_.assign(n, 0);
  prefix_.assign(n, Permutation::identity(n));
  done_ = false;
}

void ElementRange::iterator::refresh_from(std::size_t level) {
  for (std::size_t l = level; l < digits_.size(); ++l) {
    const auto& u = chain_->representatives(l)[digits_[l]];
    if (l == 0)
      prefix_[0] = u;
    else if (digits_[l] == 0)
      prefix_[l] = prefix_[l - 1];
    else
      prefix_[l] = compose(prefix_[l - 1], u);
  }
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  std::size_t k = digits_.size();
  while (k > 0) {
    --k;
    if (digits_[k] + 1 < chain_->orbit(k).size()) {
      ++digits_[k];
      std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(k) + 1, digits_.end(), 0);
      refresh_from(k);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

// ---------------------------------------------------------------------------
// Orbits, stabilizers, intersections

std::vector<IntegerVector> orbit_of_vector(const PermutationGroup& group, const IntegerVector& v) {
  if (v.size() != group.degree())
    throw std::invalid_argument("orbit_of_vector: vector length " + std::to_string(v.size()) +
                                " differs from group degree " + std::to_string(group.degree()));
  std::vector<IntegerVector> orbit{v};
  std::unordered_set<IntegerVector, IntegerVectorHash> seen{v};
  IntegerVector image(v.size());
  for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
    for (const auto& g : group.generators()) {
      act_into(g, orbit[idx], image);
      if (seen.insert(image).second)
        orbit.push_back(image);
    }
  }
  return orbit;
}

PermutationGroup set_stabilizer_of_orbit(const PermutationGroup& group, const IntegerVector& v,
                                         std::size_t ambient_n) {
  if (ambient_n != group.degree() || v.size() != ambient_n)
    throw std::invalid_argument("set_stabilizer_of_orbit: degree mismatch");
  if (ambient_n > desk_limits().brute_force_max_degree)
    warn("set stabilizer brute-forces S_" + std::to_string(ambient_n) + " (above the desk bound of " +
         std::to_string(desk_limits().brute_force_max_degree) + ")");

  const auto orbit = orbit_of_vector(group, v);
  const std::unordered_set<IntegerVector, IntegerVectorHash> orbit_set(orbit.begin(), orbit.end());

  // G always stabilizes its own orbit.
  PermutationGroup result = group;
  std::vector<int> images(ambient_n);
  std::iota(images.begin(), images.end(), 0);
  IntegerVector image(ambient_n);
  do {
    auto tau = Permutation::from_images(images);
    act_into(tau, v, image);
    if (!orbit_set.contains(image))
      continue;
    if (result.contains(tau))
      continue;
    bool stabilizes = true;
    for (const auto& x : orbit) {
      act_into(tau, x, image);
      if (!orbit_set.contains(image)) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes)
      result = result.with_generator(tau);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersection: groups of degree " + std::to_string(a.degree()) +
                                " and " + std::to_string(b.degree()));
  const auto& small = a.order() <= b.order() ? a : b;
  const auto& large = a.order() <= b.order() ? b : a;
  if (small.is_subgroup_of(large))
    return small;
  if (small.order() > desk_limits().element_stream_max)
    warn("intersection streams " + small.order().str() + " elements");

  PermutationGroup result = PermutationGroup::trivial(a.degree());
  for (const auto& g : small.elements()) {
    if (large.contains(g) && !result.contains(g))
      result = result.with_generator(g);
  }
  return result;
}

} // namespace orbitgen
