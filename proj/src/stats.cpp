#include "orbitgen/stats.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace orbitgen {

namespace {

double ratio_of(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == s.npos ? s.npos : pos - start));
    if (pos == s.npos)
      break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::invalid_argument(std::string("stats: bad value for ") + name + ": '" +
                                std::string(field) + "'");
  return value;
}

} // namespace

double EnumStats::err() const { return ratio_of(tested_noncanonical(), canonicals); }
double EnumStats::ratio() const { return ratio_of(total_explored, total_orbit_sizes); }
double EnumStats::complexity() const { return ratio_of(total_explored, canonicals); }

double EnumStats::relative_error_bound() const {
  const double nn = static_cast<double>(n);
  const double order = group_order.convert_to<double>();
  const double by_order = nn * (order - 1.0) / (nn + static_cast<double>(max_degree));
  return std::min(by_order, nn - 1.0);
}

bool EnumStats::within_error_bound() const {
  if (canonicals == 0)
    return true;
  // Compare exactly: (tests - canonicals) * (n + d) <= n (|G| - 1) * canonicals,
  // and (tests - canonicals) <= (n - 1) * canonicals.
  const BigInt excess = tested_noncanonical();
  const BigInt lhs = excess * BigInt(static_cast<std::int64_t>(n) + max_degree);
  const BigInt by_order = BigInt(n) * (group_order - 1) * canonicals;
  const BigInt by_children = BigInt(n == 0 ? 0 : n - 1) * canonicals;
  return lhs <= by_order && excess <= by_children;
}

void EnumStats::merge(const EnumStats& other) {
  for (const auto& [d, c] : other.canonicals_by_degree)
    canonicals_by_degree[d] += c;
  canonicals += other.canonicals;
  tests += other.tests;
  skipped += other.skipped;
  total_orbit_sizes += other.total_orbit_sizes;
  total_explored += other.total_explored;
  max_degree = std::max(max_degree, other.max_degree);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{})
    throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

std::string stats_to_plain(const EnumStats& s) {
  std::ostringstream out;
  out << "stats: canonicals=" << s.canonicals << " tests=" << s.tests << " skipped=" << s.skipped
      << " total_orbit_sizes=" << s.total_orbit_sizes << " total_explored=" << s.total_explored
      << " err=" << format_double(s.err()) << " ratio=" << format_double(s.ratio())
      << " complexity=" << format_double(s.complexity());
  return out.str();
}

std::string stats_csv_header() {
  return "n,group_order,canonicals,tests,skipped,total_orbit_sizes,total_explored,max_degree,err,"
         "ratio,complexity";
}

std::string stats_to_csv_row(const EnumStats& s) {
  std::ostringstream out;
  out << s.n << ',' << s.group_order.str() << ',' << s.canonicals << ',' << s.tests << ','
      << s.skipped << ',' << s.total_orbit_sizes << ',' << s.total_explored << ',' << s.max_degree
      << ',' << format_double(s.err()) << ',' << format_double(s.ratio()) << ','
      << format_double(s.complexity());
  return out.str();
}

EnumStats stats_from_csv_row(std::string_view row) {
  while (!row.empty() && (row.back() == '\n' || row.back() == '\r'))
    row.remove_suffix(1);
  auto fields = split(row, ',');
  if (fields.size() != 11)
    throw std::invalid_argument("stats: expected 11 CSV fields, got " + std::to_string(fields.size()));
  EnumStats s;
  s.n = parse_number<std::size_t>(fields[0], "n");
  s.group_order = BigInt(std::string(fields[1]));
  s.canonicals = parse_number<std::uint64_t>(fields[2], "canonicals");
  s.tests = parse_number<std::uint64_t>(fields[3], "tests");
  s.skipped = parse_number<std::uint64_t>(fields[4], "skipped");
  s.total_orbit_sizes = parse_number<std::uint64_t>(fields[5], "total_orbit_sizes");
  s.total_explored = parse_number<std::uint64_t>(fields[6], "total_explored");
  s.max_degree = parse_number<std::int64_t>(fields[7], "max_degree");
  // err/ratio/complexity are derived; check they agree with the counters.
  if (parse_number<double>(fields[8], "err") != s.err() ||
      parse_number<double>(fields[9], "ratio") != s.ratio() ||
      parse_number<double>(fields[10], "complexity") != s.complexity())
    throw std::invalid_argument("stats: derived fields disagree with counters");
  return s;
}

std::string stats_to_json(const EnumStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["group_order"] = s.group_order.str();
  j["canonicals"] = s.canonicals;
  j["tests"] = s.tests;
  j["skipped"] = s.skipped;
  j["total_orbit_sizes"] = s.total_orbit_sizes;
  j["total_explored"] = s.total_explored;
  j["max_degree"] = s.max_degree;
  auto& by_degree = j["canonicals_by_degree"] = nlohmann::ordered_json::object();
  for (const auto& [d, c] : s.canonicals_by_degree)
    by_degree[std::to_string(d)] = c;
  j["err"] = s.err();
  j["ratio"] = s.ratio();
  j["complexity"] = s.complexity();
  return j.dump();
}

EnumStats stats_from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  EnumStats s;
  s.n = j.at("n").get<std::size_t>();
  s.group_order = BigInt(j.at("group_order").get<std::string>());
  s.canonicals = j.at("canonicals").get<std::uint64_t>();
  s.tests = j.at("tests").get<std::uint64_t>();
  s.skipped = j.at("skipped").get<std::uint64_t>();
  s.total_orbit_sizes = j.at("total_orbit_sizes").get<std::uint64_t>();
  s.total_explored = j.at("total_explored").get<std::uint64_t>();
  s.max_degree = j.at("max_degree").get<std::int64_t>();
  for (const auto& [key, value] : j.at("canonicals_by_degree").items())
    s.canonicals_by_degree[std::stoll(key)] = value.get<std::uint64_t>();
  if (j.at("err").get<double>() != s.err() || j.at("ratio").get<double>() != s.ratio() ||
      j.at("complexity").get<double>() != s.complexity())
    throw std::invalid_argument("stats: derived fields disagree with counters");
  return s;
}

} // namespace orbitgen
