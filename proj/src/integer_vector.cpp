#include "orbitgen/integer_vector.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace orbitgen {

namespace {

void check_entries(const std::vector<IntegerVector::value_type>& entries) {
  for (auto e : entries) {
    if (e < 0)
      throw std::invalid_argument("integer vector entries must be non-negative, got " +
                                  std::to_string(e));
  }
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

} // namespace

IntegerVector::IntegerVector(std::initializer_list<value_type> entries) : entries_(entries) {
  check_entries(entries_);
}

IntegerVector::IntegerVector(std::vector<value_type> entries) : entries_(std::move(entries)) {
  check_entries(entries_);
}

std::int64_t IntegerVector::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool IntegerVector::is_zero() const {
  for (auto e : entries_)
    if (e != 0)
      return false;
  return true;
}

int IntegerVector::last_nonzero() const {
  for (int i = static_cast<int>(entries_.size()) - 1; i >= 0; --i)
    if (entries_[static_cast<std::size_t>(i)] != 0)
      return i;
  return -1;
}

std::string IntegerVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntegerVector& v) { return os << v.to_string(); }

IntegerVector parse_integer_vector(std::string_view text) {
  auto body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = trim(body.substr(1, body.size() - 2));
  if (body.empty())
    throw std::invalid_argument("empty integer vector");

  std::vector<IntegerVector::value_type> entries;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto token = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    IntegerVector::value_type value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw std::invalid_argument("bad vector entry '" + std::string(token) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return IntegerVector(std::move(entries));
}

std::size_t IntegerVectorHash::operator()(const IntegerVector& v) const noexcept {
  // FNV-1a over the entries
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : v) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

PrefixOrder prefix_compare(const IntegerVector& v, const IntegerVector& w, std::size_t length) {
  if (v.size() != w.size())
    throw std::invalid_argument("prefix_compare: vectors of different lengths");
  if (length < 1 || length > v.size())
    throw std::out_of_range("prefix_compare: prefix length " + std::to_string(length) +
                            " outside 1.." + std::to_string(v.size()));
  for (std::size_t j = 0; j < length; ++j) {
    if (v[j] < w[j])
      return PrefixOrder::less;
    if (v[j] > w[j])
      return PrefixOrder::greater;
  }
  return PrefixOrder::equal_prefix;
}

} // namespace orbitgen
