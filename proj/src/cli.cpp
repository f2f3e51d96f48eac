#include "orbitgen/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitgen/canonical.hpp"
#include "orbitgen/catalog.hpp"
#include "orbitgen/enum_tree.hpp"
#include "orbitgen/galois.hpp"
#include "orbitgen/graphs.hpp"
#include "orbitgen/group_io.hpp"
#include "orbitgen/limits.hpp"
#include "orbitgen/oracle.hpp"

namespace orbitgen::cli {

namespace {

// Input problems the user can fix by changing flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupSource {
  std::string file;
  std::string named;

  void add_to(CLI::App& app) {
    auto* f = app.add_option("--group", file, "group file (first line 'degree N', then one generator per line)");
    auto* n = app.add_option("--named", named, "catalog group, e.g. cyclic5, frobenius20, pairs4");
    f->excludes(n);
  }

  PermutationGroup load() const {
    if (file.empty() && named.empty())
      throw UsageError("give a group with --group FILE or --named NAME");
    if (!named.empty()) {
      auto g = named_group(named);
      if (!g)
        throw UsageError("unknown group name '" + named + "'");
      return *g;
    }
    return load_group_file(file);
  }
};

struct Constraints {
  std::optional<std::int64_t> degree;
  std::optional<std::int64_t> max_degree;
  std::optional<int> max_part;
  bool staircase = false;
  std::string ceiling;

  void add_to(CLI::App& app) {
    auto* d = app.add_option("--degree", degree, "only vectors of this degree")->check(CLI::NonNegativeNumber);
    auto* m = app.add_option("--max-degree", max_degree, "every degree up to this one")
                  ->check(CLI::NonNegativeNumber);
    d->excludes(m);
    app.add_option("--max-part", max_part, "upper bound on every entry")->check(CLI::NonNegativeNumber);
    auto* s = app.add_flag("--staircase", staircase, "componentwise v_i <= n - i, the staircase vector itself excluded");
    auto* c = app.add_option("--ceiling", ceiling, "componentwise upper bounds, e.g. 4,3,2,1,0");
    s->excludes(c);
  }

  GenerationConfig config(PermutationGroup group) const {
    if (!degree && !max_degree && !max_part && !staircase && ceiling.empty())
      throw UsageError("infinite enumeration: give --degree, --max-degree, --max-part, --staircase or --ceiling");
    GenerationConfig cfg = staircase ? GenerationConfig::staircase(std::move(group))
                                     : GenerationConfig{.group = std::move(group)};
    if (degree) {
      cfg.mode = GenerationMode::by_degree;
      cfg.degree = *degree;
    } else if (max_degree) {
      cfg.mode = GenerationMode::up_to_degree;
      cfg.degree = *max_degree;
    }
    if (max_part)
      cfg.max_part = *max_part;
    if (!ceiling.empty()) {
      try {
        cfg.ceiling = parse_integer_vector(ceiling);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--ceiling: ") + e.what());
      }
    }
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

std::string csv_header_for(std::size_t n) {
  std::string h = "degree";
  for (std::size_t i = 1; i <= n; ++i)
    h += ",x" + std::to_string(i);
  return h;
}

bool check_error_bound(const EnumStats& stats, std::ostream& err) {
  if (stats.within_error_bound())
    return true;
  err << "error: relative error " << format_double(stats.err()) << " exceeds the bound "
      << format_double(stats.relative_error_bound()) << '\n';
  return false;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const GroupSource& source, const Constraints& constraints, bool with_stats,
                  const std::string& format, bool depth_first, unsigned jobs, std::ostream& out,
                  std::ostream& err) {
  auto cfg = constraints.config(source.load());
  cfg.collect_stats = with_stats;
  if (depth_first) {
    if (cfg.mode != GenerationMode::by_degree)
      throw UsageError("--dfs requires --degree");
    if (jobs > 1)
      throw UsageError("--dfs and --jobs cannot be combined");
    cfg.traversal = Traversal::depth_first;
  }
  const std::size_t n = cfg.group.degree();

  EnumStats stats;
  std::vector<IntegerVector> parallel_result;
  std::optional<CanonicalEnumerator> sequential;
  if (jobs > 1)
    parallel_result = enumerate_canonicals_parallel(cfg, jobs, &stats);
  else
    sequential.emplace(cfg);

  auto for_each_vector = [&](auto&& fn) {
    if (sequential) {
      while (auto v = sequential->next())
        fn(*v);
      stats = sequential->stats();
    } else {
      for (const auto& v : parallel_result)
        fn(v);
    }
  };

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    auto& vectors = doc["vectors"] = nlohmann::ordered_json::array();
    for_each_vector([&](const IntegerVector& v) {
      vectors.push_back(std::vector<int>(v.begin(), v.end()));
    });
    if (with_stats)
      doc["stats"] = nlohmann::ordered_json::parse(stats_to_json(stats));
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << csv_header_for(n) << '\n';
    for_each_vector([&](const IntegerVector& v) { out << v.degree() << ',' << v << '\n'; });
    if (with_stats)
      out << '\n' << stats_csv_header() << '\n' << stats_to_csv_row(stats) << '\n';
  } else {
    for_each_vector([&](const IntegerVector& v) { out << v << '\n'; });
    if (with_stats)
      out << stats_to_plain(stats) << '\n';
  }
  if (with_stats && !check_error_bound(stats, err))
    return kExitFailure;
  return kExitOk;
}

BigInt burnside_for(const GenerationConfig& cfg) {
  if (cfg.ceiling)
    throw UsageError("--oracle burnside does not apply to --staircase/--ceiling boxes");
  std::optional<std::int64_t> p;
  if (cfg.max_part)
    p = *cfg.max_part;
  switch (cfg.mode) {
  case GenerationMode::by_degree:
    return burnside_count(cfg.group, p, *cfg.degree);
  case GenerationMode::up_to_degree: {
    BigInt total = 0;
    for (std::int64_t d = 0; d <= *cfg.degree; ++d)
      total += burnside_count(cfg.group, p, d);
    return total;
  }
  case GenerationMode::all:
    return burnside_count(cfg.group, p);
  }
  return 0;
}

int cmd_count(const GroupSource& source, const Constraints& constraints, const std::string& oracle,
              std::ostream& out, std::ostream& err) {
  auto cfg = constraints.config(source.load());
  const auto count = count_canonicals(cfg);
  out << count << '\n';
  if (oracle.empty())
    return kExitOk;
  const auto expected = burnside_for(cfg);
  out << "burnside " << expected << '\n';
  if (expected != count) {
    err << "error: orderly count " << count << " differs from the burnside count " << expected << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

std::vector<NamedGroup> load_group_set(const std::string& spec) {
  if (spec == "degree5")
    return transitive_degree5();
  if (spec.starts_with("catalog")) {
    auto digits = spec.substr(7);
    if (!digits.empty() && digits.size() < 3 && digits.find_first_not_of("0123456789") == std::string::npos)
      return bundled_groups(std::stoul(digits));
  }
  throw UsageError("unknown builtin group set '" + spec + "'");
}

struct SetEntry {
  std::string name;
  std::string error;
  std::optional<PermutationGroup> group;
};

std::vector<SetEntry> resolve_group_set(const std::string& spec) {
  std::vector<SetEntry> entries;
  if (!std::filesystem::exists(spec)) {
    for (auto& g : load_group_set(spec))
      entries.push_back({g.name, "", std::move(g.group)});
    return entries;
  }
  // One entry per line: a catalog name or a group file path (relative to the set file).
  std::ifstream in(spec);
  if (!in)
    throw std::runtime_error("cannot read group set '" + spec + "'");
  const auto base = std::filesystem::path(spec).parent_path();
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#')
      continue;
    auto name = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    SetEntry entry{name, "", std::nullopt};
    try {
      if (auto g = named_group(name))
        entry.group = std::move(*g);
      else
        entry.group = load_group_file(base / name);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k)
    f *= k;
  return f;
}

int cmd_bench(const std::string& group_set, const std::string& problem, const std::string& format,
              std::ostream& out, std::ostream& err) {
  if (problem != "staircase")
    throw UsageError("unknown benchmark problem '" + problem + "'");
  auto entries = resolve_group_set(group_set);
  int status = kExitOk;

  const char* header = "group,n,order,index,canonicals,tests,skipped,total_orbit_sizes,total_explored,"
                       "err,ratio,complexity,wall_ms";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (format == "csv")
    out << header << '\n';

  for (auto& entry : entries) {
    if (!entry.group) {
      err << "error: group '" << entry.name << "': " << entry.error << '\n';
      status = kExitFailure;
      continue;
    }
    try {
      auto cfg = GenerationConfig::staircase(*entry.group);
      cfg.collect_stats = true;
      const auto start = std::chrono::steady_clock::now();
      EnumStats stats;
      enumerate_canonicals(cfg, &stats);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      const auto n = entry.group->degree();
      const auto index = factorial(n) / entry.group->order();
      if (!check_error_bound(stats, err))
        status = kExitFailure;
      if (format == "csv") {
        out << entry.name << ',' << n << ',' << entry.group->order() << ',' << index << ','
            << stats.canonicals << ',' << stats.tests << ',' << stats.skipped << ','
            << stats.total_orbit_sizes << ',' << stats.total_explored << ','
            << format_double(stats.err()) << ',' << format_double(stats.ratio()) << ','
            << format_double(stats.complexity()) << ',' << format_double(ms) << '\n';
      } else {
        nlohmann::ordered_json row;
        row["group"] = entry.name;
        row["n"] = n;
        row["order"] = entry.group->order().str();
        row["index"] = index.str();
        row["stats"] = nlohmann::ordered_json::parse(stats_to_json(stats));
        row["wall_ms"] = ms;
        rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      err << "error: group '" << entry.name << "': " << e.what() << '\n';
      status = kExitFailure;
    }
  }
  if (format == "json")
    out << rows.dump() << '\n';
  return status;
}

int cmd_canonical_test(const GroupSource& source, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto group = source.load();
  int status = kExitOk;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      auto v = parse_integer_vector(line);
      if (v.size() != group.degree())
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                    ", group degree is " + std::to_string(group.degree()));
      out << (is_canonical(v, group.chain()) ? "true" : "false") << '\n';
    } catch (const std::invalid_argument& e) {
      out << "error\n";
      err << "line " << line_no << ": " << e.what() << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int cmd_primitive_invariant(const GroupSource& source, std::optional<std::int64_t> cap, std::ostream& out) {
  const auto group = source.load();
  const auto chain = minimal_primitive_invariant(group, cap);
  out << "# degree, vector, |AutV|, |cumulative|\n";
  for (const auto& step : chain.steps)
    out << step.vector.degree() << ", (" << step.vector << "), " << step.orbit_stabilizer.order()
        << ", " << step.cumulative.order() << '\n';
  out << "polynomial: " << assemble_primitive_polynomial(chain).to_string() << '\n';
  return kExitOk;
}

int cmd_graphs(std::size_t nodes, bool list, std::optional<std::int64_t> multigraph_edges,
               bool edges, std::ostream& out) {
  if (nodes < 2)
    throw UsageError("--nodes must be at least 2");
  if (!list) {
    out << (multigraph_edges ? count_multigraphs(nodes, *multigraph_edges) : count_unlabeled_graphs(nodes))
        << '\n';
    return kExitOk;
  }
  const auto graphs = multigraph_edges ? enumerate_multigraphs(nodes, *multigraph_edges) : enumerate_graphs(nodes);
  for (const auto& g : graphs) {
    out << (multigraph_edges ? g.to_string() : edge_bitstring(g));
    if (edges)
      out << '\t' << edge_list(g, nodes);
    out << '\n';
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate integer vectors up to the action of a permutation group", "orbitgen"};
  app.require_subcommand(1);

  // enumerate
  GroupSource enum_group;
  Constraints enum_constraints;
  bool enum_stats = false;
  bool enum_dfs = false;
  unsigned enum_jobs = 1;
  std::string enum_format = "plain";
  auto* enumerate = app.add_subcommand("enumerate", "list canonical vectors, one per orbit");
  enum_group.add_to(*enumerate);
  enum_constraints.add_to(*enumerate);
  enumerate->add_flag("--stats", enum_stats, "append the statistics record");
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"plain", "json", "csv"}));
  enumerate->add_flag("--dfs", enum_dfs, "depth-first (requires --degree)");
  enumerate->add_option("--jobs", enum_jobs, "worker threads per degree level")->check(CLI::PositiveNumber);

  // count
  GroupSource count_group;
  Constraints count_constraints;
  std::string count_oracle;
  auto* count = app.add_subcommand("count", "count canonical vectors");
  count_group.add_to(*count);
  count_constraints.add_to(*count);
  count->add_option("--oracle", count_oracle, "cross-check against an independent count")
      ->check(CLI::IsMember({"burnside"}));

  // bench
  std::string bench_set = "degree5";
  std::string bench_problem = "staircase";
  std::string bench_format = "csv";
  auto* bench = app.add_subcommand("bench", "staircase statistics for a set of groups");
  bench->add_option("--group-set", bench_set, "builtin set (degree5, catalogN) or a file of group names/paths");
  bench->add_option("--problem", bench_problem)->check(CLI::IsMember({"staircase"}));
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv", "json"}));

  // canonical-test
  GroupSource test_group;
  auto* canonical_test = app.add_subcommand("canonical-test", "read vectors from stdin, print true/false");
  test_group.add_to(*canonical_test);

  // primitive-invariant
  GroupSource prim_group;
  std::optional<std::int64_t> prim_cap;
  auto* primitive = app.add_subcommand("primitive-invariant", "polynomial whose stabilizer in S_n is G");
  prim_group.add_to(*primitive);
  primitive->add_option("--degree-cap", prim_cap, "largest degree searched (default n(n-1)/2)");

  // graphs
  std::size_t graph_nodes = 0;
  bool graph_count = false;
  bool graph_list = false;
  bool graph_edges = false;
  std::optional<std::int64_t> graph_multi;
  auto* graphs = app.add_subcommand("graphs", "unlabeled graphs and multigraphs");
  graphs->add_option("--nodes", graph_nodes)->required();
  auto* gc = graphs->add_flag("--count", graph_count);
  auto* gl = graphs->add_flag("--list", graph_list);
  gc->excludes(gl);
  graphs->add_option("--multigraph-edges", graph_multi, "multigraphs with this many edges")
      ->check(CLI::NonNegativeNumber);
  graphs->add_flag("--edges", graph_edges, "also print edge lists i-j");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate)
      return cmd_enumerate(enum_group, enum_constraints, enum_stats, enum_format, enum_dfs, enum_jobs, out, err);
    if (*count)
      return cmd_count(count_group, count_constraints, count_oracle, out, err);
    if (*bench)
      return cmd_bench(bench_set, bench_problem, bench_format, out, err);
    if (*canonical_test)
      return cmd_canonical_test(test_group, in, out, err);
    if (*primitive)
      return cmd_primitive_invariant(prim_group, prim_cap, out);
    if (*graphs)
      return cmd_graphs(graph_nodes, graph_list, graph_multi, graph_edges, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

} // namespace orbitgen::cli
