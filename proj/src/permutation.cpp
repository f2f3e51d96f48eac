#include "orbitgen/permutation.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace orbitgen {

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<int>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size())
      throw std::invalid_argument("permutation image " + std::to_string(x) + " out of range");
    if (seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permutation image " + std::to_string(x) + " repeated");
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images_one_based(const std::vector<int>& images) {
  std::vector<int> zero_based;
  zero_based.reserve(images.size());
  for (int x : images)
    zero_based.push_back(x - 1);
  return from_images(std::move(zero_based));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == static_cast<int>(start))
      continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        out += ',';
      first = false;
      out += std::to_string(x + 1);
      x = static_cast<std::size_t>(images_[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(q.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p(q(static_cast<int>(i)));
  return Permutation(std::move(images));
}

IntegerVector act(const Permutation& p, const IntegerVector& v) {
  IntegerVector out(v.size());
  act_into(p, v, out);
  return out;
}

void act_into(const Permutation& p, const IntegerVector& v, IntegerVector& out) {
  if (p.degree() != v.size() || out.size() != v.size())
    throw std::invalid_argument("act: permutation of degree " + std::to_string(p.degree()) +
                                " applied to vector of length " + std::to_string(v.size()));
  const auto images = p.images();
  for (std::size_t j = 0; j < v.size(); ++j)
    out[static_cast<std::size_t>(images[j])] = v[j];
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<int>(i);
  std::vector<bool> used(n, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& what, std::string_view token) -> void {
    throw std::invalid_argument("cycle notation: " + what + " at '" + std::string(token) + "'");
  };

  skip_ws();
  if (pos == text.size())
    fail("empty text", text);

  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('", text.substr(pos, 1));
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos; // "()" is the identity
    } else {
      while (true) {
        skip_ws();
        std::size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        auto token = text.substr(begin, pos - begin);
        if (token.empty())
          fail("expected a point", text.substr(begin, 1));
        long point = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), point);
        if (ec != std::errc{} || ptr != token.data() + token.size() || point < 1 ||
            static_cast<std::size_t>(point) > n)
          fail("point out of range 1.." + std::to_string(n), token);
        if (used[static_cast<std::size_t>(point - 1)])
          fail("repeated point", token);
        used[static_cast<std::size_t>(point - 1)] = true;
        cycle.push_back(static_cast<int>(point - 1));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')'", pos < text.size() ? text.substr(pos, 1) : std::string_view("<end>"));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace orbitgen
