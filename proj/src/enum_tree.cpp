#include "orbitgen/enum_tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "orbitgen/canonical.hpp"

namespace orbitgen {

// ---------------------------------------------------------------------------
// Tree

IntegerVector father(const IntegerVector& v) {
  const int i = v.last_nonzero();
  if (i < 0)
    throw std::invalid_argument("father: the root has no father");
  IntegerVector f = v;
  --f[static_cast<std::size_t>(i)];
  return f;
}

std::size_t child_count(const IntegerVector& v) {
  const int i = std::max(v.last_nonzero(), 0);
  return v.size() - static_cast<std::size_t>(i);
}

IntegerVector child(const IntegerVector& v, std::size_t k) {
  const auto i = static_cast<std::size_t>(std::max(v.last_nonzero(), 0));
  if (k >= v.size() - i)
    throw std::out_of_range("child: index " + std::to_string(k) + " out of range");
  IntegerVector c = v;
  if (k == 0)
    ++c[i];
  else
    c[i + k] = 1;
  return c;
}

std::vector<IntegerVector> children(const IntegerVector& v) {
  std::vector<IntegerVector> out;
  const std::size_t count = child_count(v);
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(child(v, k));
  return out;
}

// ---------------------------------------------------------------------------
// GenerationConfig

GenerationConfig GenerationConfig::with_degree(PermutationGroup group, std::int64_t d) {
  return {.group = std::move(group), .mode = GenerationMode::by_degree, .degree = d};
}

GenerationConfig GenerationConfig::up_to(PermutationGroup group, std::int64_t d) {
  return {.group = std::move(group), .mode = GenerationMode::up_to_degree, .degree = d};
}

GenerationConfig GenerationConfig::with_max_part(PermutationGroup group, IntegerVector::value_type p) {
  return {.group = std::move(group), .mode = GenerationMode::all, .max_part = p};
}

GenerationConfig GenerationConfig::staircase(PermutationGroup group) {
  const std::size_t n = group.degree();
  IntegerVector ceiling(n);
  for (std::size_t i = 0; i < n; ++i)
    ceiling[i] = static_cast<IntegerVector::value_type>(n - 1 - i);
  // Strictly under: the staircase itself is the only vector of degree
  // n(n-1)/2 in the box, so capping the degree one below excludes it.
  const auto top = static_cast<std::int64_t>(n * (n - 1) / 2);
  if (top == 0)
    return {.group = std::move(group), .mode = GenerationMode::all, .ceiling = std::move(ceiling)};
  return {.group = std::move(group),
          .mode = GenerationMode::up_to_degree,
          .degree = top - 1,
          .ceiling = std::move(ceiling)};
}

void GenerationConfig::validate() const {
  if (mode != GenerationMode::all && !degree)
    throw std::invalid_argument("generation: degree mode requires a degree");
  if (degree && *degree < 0)
    throw std::invalid_argument("generation: degree must be non-negative");
  if (max_part && *max_part < 0)
    throw std::invalid_argument("generation: max_part must be non-negative");
  if (ceiling && ceiling->size() != group.degree())
    throw std::invalid_argument("generation: ceiling length " + std::to_string(ceiling->size()) +
                                " differs from group degree " + std::to_string(group.degree()));
  if (mode == GenerationMode::all && !max_part && !ceiling && !degree)
    throw std::invalid_argument(
        "generation: infinite configuration (give a degree bound, a max_part or a ceiling)");
  if (traversal == Traversal::depth_first && mode != GenerationMode::by_degree)
    throw std::invalid_argument("generation: depth-first traversal requires a single degree");
}

std::optional<IntegerVector::value_type> GenerationConfig::entry_bound(std::size_t i) const {
  std::optional<IntegerVector::value_type> bound = max_part;
  if (ceiling)
    bound = bound ? std::min(*bound, (*ceiling)[i]) : (*ceiling)[i];
  return bound;
}

std::int64_t GenerationConfig::degree_limit() const {
  std::int64_t box = 0;
  bool finite_box = true;
  for (std::size_t i = 0; i < group.degree(); ++i) {
    auto b = entry_bound(i);
    if (!b) {
      finite_box = false;
      break;
    }
    box += *b;
  }
  if (degree)
    return finite_box ? std::min(*degree, box) : *degree;
  return box;
}

bool GenerationConfig::admits(const IntegerVector& v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (max_part && v[i] > *max_part)
      return false;
    if (ceiling && v[i] > (*ceiling)[i])
      return false;
  }
  return true;
}

std::uint64_t count_descendants(const IntegerVector& v, const GenerationConfig& config) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kMax : r;
  };
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kMax : r;
  };

  const std::size_t n = v.size();
  const auto i = static_cast<std::size_t>(std::max(v.last_nonzero(), 0));
  // Descendants: positions < i as in v, position i at least v_i, anything after.
  // Free amounts per position, shifted so that v itself is the all-zero choice.
  std::vector<std::optional<std::int64_t>> room;
  for (std::size_t j = i; j < n; ++j) {
    auto b = config.entry_bound(j);
    if (b)
      room.push_back(std::int64_t{*b} - (j == i ? v[j] : 0));
    else
      room.push_back(std::nullopt);
    if (room.back() && *room.back() < 0)
      return 0;
  }

  const std::int64_t limit = config.degree_limit();
  const std::int64_t budget = limit - v.degree();
  if (budget <= 0)
    return 0;

  bool box_fits = true;
  std::int64_t box_total = 0;
  for (const auto& r : room) {
    if (!r) {
      box_fits = false;
      break;
    }
    box_total += *r;
  }
  if (box_fits && box_total <= budget) {
    std::uint64_t product = 1;
    for (const auto& r : room)
      product = mul(product, static_cast<std::uint64_t>(*r + 1));
    return product - 1;
  }

  // ways[s]: choices so far with total extra s <= budget
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(budget) + 1, 0);
  ways[0] = 1;
  for (const auto& r : room) {
    const std::int64_t cap = r ? std::min(*r, budget) : budget;
    std::vector<std::uint64_t> next(ways.size(), 0);
    // next[s] = sum_{t=0..cap} ways[s-t], via a sliding window sum
    std::uint64_t window = 0;
    for (std::int64_t s = 0; s <= budget; ++s) {
      window = add(window, ways[static_cast<std::size_t>(s)]);
      if (s - cap - 1 >= 0 && window != kMax)
        window -= ways[static_cast<std::size_t>(s - cap - 1)];
      next[static_cast<std::size_t>(s)] = window;
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways)
    total = add(total, w);
  return total == kMax ? kMax : total - 1;
}

// ---------------------------------------------------------------------------
// CanonicalEnumerator

CanonicalEnumerator::CanonicalEnumerator(GenerationConfig config) : config_(std::move(config)) {
  config_.validate();
  limit_ = config_.degree_limit();
  stats_.n = config_.group.degree();
  stats_.group_order = config_.group.order();
}

bool CanonicalEnumerator::yields_degree(std::int64_t d) const {
  if (config_.mode == GenerationMode::by_degree)
    return d == *config_.degree;
  return d <= limit_;
}

bool CanonicalEnumerator::test(const IntegerVector& v) {
  if (!config_.collect_stats)
    return is_canonical(v, config_.group.chain());
  auto result = is_canonical_counted(v, config_.group.chain());
  const auto d = v.degree();
  ++stats_.tests;
  stats_.max_degree = std::max(stats_.max_degree, d);
  stats_.total_orbit_sizes += orbit_of_vector(config_.group, v).size();
  if (result.canonical) {
    ++stats_.canonicals;
    ++stats_.canonicals_by_degree[d];
    // Only certified canonicals contribute: a rejection stops after an
    // arbitrary prefix of the orbit walk.
    stats_.total_explored += result.explored;
  } else {
    const auto below = count_descendants(v, config_);
    stats_.skipped = below > std::numeric_limits<std::uint64_t>::max() - stats_.skipped
                         ? std::numeric_limits<std::uint64_t>::max()
                         : stats_.skipped + below;
  }
  return result.canonical;
}

std::optional<IntegerVector> CanonicalEnumerator::next() {
  if (finished_)
    return std::nullopt;
  auto out = config_.traversal == Traversal::depth_first ? next_depth_first() : next_breadth_first();
  if (!out)
    finished_ = true;
  return out;
}

std::optional<IntegerVector> CanonicalEnumerator::next_breadth_first() {
  if (!started_) {
    started_ = true;
    auto root = IntegerVector::zero(config_.group.degree());
    // The root is always canonical; it still counts as one test.
    test(root);
    if (limit_ > 0)
      previous_.push_back(root);
    level_degree_ = 1;
    if (yields_degree(0))
      return root;
  }
  while (level_degree_ <= limit_) {
    const bool keep = level_degree_ < limit_;
    while (parent_ < previous_.size()) {
      const auto& parent = previous_[parent_];
      const std::size_t count = child_count(parent);
      while (next_child_ < count) {
        auto c = child(parent, next_child_++);
        if (!config_.admits(c) || !test(c))
          continue;
        if (keep)
          current_.push_back(c);
        if (yields_degree(level_degree_))
          return c;
      }
      ++parent_;
      next_child_ = 0;
    }
    previous_ = std::move(current_);
    current_.clear();
    parent_ = 0;
    ++level_degree_;
    if (previous_.empty())
      break;
  }
  return std::nullopt;
}

std::optional<IntegerVector> CanonicalEnumerator::next_depth_first() {
  const std::int64_t target = *config_.degree;
  if (!started_) {
    started_ = true;
    auto root = IntegerVector::zero(config_.group.degree());
    test(root);
    if (target == 0)
      return root;
    if (limit_ < target)
      return std::nullopt;
    stack_.push_back({root, 0});
  }
  while (!stack_.empty()) {
    auto& frame = stack_.back();
    if (frame.next_child >= child_count(frame.node)) {
      stack_.pop_back();
      continue;
    }
    auto c = child(frame.node, frame.next_child++);
    if (!config_.admits(c) || !test(c))
      continue;
    if (static_cast<std::int64_t>(stack_.size()) == target)
      return c;
    stack_.push_back({std::move(c), 0});
  }
  return std::nullopt;
}

std::vector<IntegerVector> enumerate_canonicals(const GenerationConfig& config, EnumStats* stats) {
  auto local = config;
  local.collect_stats = config.collect_stats || stats != nullptr;
  CanonicalEnumerator e(std::move(local));
  std::vector<IntegerVector> out;
  while (auto v = e.next())
    out.push_back(std::move(*v));
  if (stats)
    *stats = e.stats();
  return out;
}

std::uint64_t count_canonicals(const GenerationConfig& config) {
  auto quiet = config;
  quiet.collect_stats = false;
  CanonicalEnumerator e(std::move(quiet));
  std::uint64_t count = 0;
  while (e.next())
    ++count;
  return count;
}

std::vector<IntegerVector> enumerate_canonicals_parallel(const GenerationConfig& requested,
                                                         unsigned jobs, EnumStats* stats) {
  requested.validate();
  auto config = requested;
  config.collect_stats = requested.collect_stats || stats != nullptr;
  jobs = std::max(1u, jobs);
  const std::int64_t limit = config.degree_limit();
  auto yields = [&](std::int64_t d) {
    return config.mode == GenerationMode::by_degree ? d == *config.degree : d <= limit;
  };

  // One worker per slice of the parent level; each runs its own enumerator
  // state only through test(), so reuse the sequential test bookkeeping.
  struct Worker {
    std::vector<IntegerVector> found;
    EnumStats stats;
  };
  auto run_slice = [&](const std::vector<IntegerVector>& parents, std::size_t begin,
                       std::size_t end, Worker& worker) {
    GenerationConfig local = config;
    local.traversal = Traversal::breadth_first;
    CanonicalEnumerator tester(local);
    for (std::size_t p = begin; p < end; ++p) {
      const auto& parent = parents[p];
      for (std::size_t k = 0; k < child_count(parent); ++k) {
        auto c = child(parent, k);
        if (local.admits(c) && tester.test(c))
          worker.found.push_back(std::move(c));
      }
    }
    worker.stats = tester.stats_;
  };

  EnumStats total;
  total.n = config.group.degree();
  total.group_order = config.group.order();

  std::vector<IntegerVector> out;
  std::vector<IntegerVector> level{IntegerVector::zero(config.group.degree())};
  {
    GenerationConfig local = config;
    local.traversal = Traversal::breadth_first;
    CanonicalEnumerator root_tester(local);
    root_tester.test(level.front());
    total.merge(root_tester.stats_);
  }
  if (yields(0))
    out.push_back(level.front());

  for (std::int64_t d = 1; d <= limit && !level.empty(); ++d) {
    const std::size_t slices = std::min<std::size_t>(jobs, level.size());
    std::vector<Worker> workers(slices);
    std::vector<std::thread> threads;
    const std::size_t chunk = (level.size() + slices - 1) / slices;
    for (std::size_t s = 0; s < slices; ++s) {
      const std::size_t begin = s * chunk;
      const std::size_t end = std::min(level.size(), begin + chunk);
      threads.emplace_back(run_slice, std::cref(level), begin, end, std::ref(workers[s]));
    }
    for (auto& t : threads)
      t.join();
    std::vector<IntegerVector> next;
    for (auto& w : workers) {
      total.merge(w.stats);
      next.insert(next.end(), std::make_move_iterator(w.found.begin()),
                  std::make_move_iterator(w.found.end()));
    }
    if (yields(d)) {
      auto sorted = next;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      out.insert(out.end(), sorted.begin(), sorted.end());
    }
    level = std::move(next);
  }
  if (stats)
    *stats = std::move(total);
  return out;
}

} // namespace orbitgen
