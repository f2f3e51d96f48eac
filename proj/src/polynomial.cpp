#include "orbitgen/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitgen {

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, const Rational& c) {
  SparsePolynomial p(nvars);
  p.add_term(IntegerVector::zero(nvars), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const IntegerVector& exponents, const Rational& c) {
  SparsePolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t nvars, std::size_t index) {
  IntegerVector e(nvars);
  e[index] = 1;
  return monomial(e);
}

Rational SparsePolynomial::coefficient(const IntegerVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const IntegerVector& exponents, const Rational& c) {
  if (exponents.size() != nvars_)
    throw std::invalid_argument("polynomial: exponent vector of length " +
                                std::to_string(exponents.size()) + " in " + std::to_string(nvars_) +
                                " variables");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::vector<std::pair<IntegerVector, Rational>> SparsePolynomial::sorted_terms() const {
  std::vector<std::pair<IntegerVector, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

void SparsePolynomial::check_same_vars(const SparsePolynomial& other) const {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("polynomial: mixing " + std::to_string(nvars_) + " and " +
                                std::to_string(other.nvars_) + " variables");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  check_same_vars(other);
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  check_same_vars(other);
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.check_same_vars(b);
  SparsePolynomial out(a.nvars_);
  IntegerVector e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!factors.empty())
        factors += '*';
      factors += "x" + std::to_string(i + 1);
      if (e[i] != 1)
        factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty())
      out += orbitgen::to_string(magnitude);
    else if (magnitude == 1)
      out += factors;
    else
      out += orbitgen::to_string(magnitude) + "*" + factors;
  }
  return out;
}

SparsePolynomial act(const Permutation& sigma, const SparsePolynomial& p) {
  if (sigma.degree() != p.nvars())
    throw std::invalid_argument("act: permutation degree differs from polynomial variable count");
  SparsePolynomial out(p.nvars());
  for (const auto& [e, c] : p.terms())
    out.add_term(act(sigma, e), c);
  return out;
}

} // namespace orbitgen
