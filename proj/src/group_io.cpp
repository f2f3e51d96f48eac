#include "orbitgen/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orbitgen {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

} // namespace

PermutationGroup parse_group_text(std::string_view text) {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    auto line = trim(text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos));
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (line.empty() || line.front() == '#')
      continue;
    try {
      if (degree == 0) {
        if (!line.starts_with("degree"))
          throw std::invalid_argument("expected 'degree N', got '" + std::string(line) + "'");
        auto value = trim(line.substr(6));
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), degree);
        if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || degree == 0)
          throw std::invalid_argument("bad degree '" + std::string(value) + "'");
        continue;
      }
      generators.push_back(parse_permutation(line, degree));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("group text line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (degree == 0)
    throw std::invalid_argument("group text: missing 'degree N' line");
  return PermutationGroup(degree, std::move(generators));
}

PermutationGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read group file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group_text(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string format_group_text(const PermutationGroup& group) {
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (const auto& g : group.generators())
    out += g.to_string() + "\n";
  return out;
}

} // namespace orbitgen
