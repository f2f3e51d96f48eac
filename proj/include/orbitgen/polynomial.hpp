#ifndef ORBITGEN_POLYNOMIAL_HPP
#define ORBITGEN_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitgen/integer_vector.hpp"
#include "orbitgen/numeric.hpp"
#include "orbitgen/permutation.hpp"

namespace orbitgen {

/// Sparse polynomial over the rationals in x1..xn. Terms map exponent
/// vectors to non-zero coefficients.
class SparsePolynomial {
public:
  using Terms = std::unordered_map<IntegerVector, Rational, IntegerVectorHash>;

  explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}

  static SparsePolynomial constant(std::size_t nvars, const Rational& c);
  static SparsePolynomial monomial(const IntegerVector& exponents, const Rational& c = 1);
  // x_{index+1}
  static SparsePolynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of x^exponents (zero when absent).
  Rational coefficient(const IntegerVector& exponents) const;

  /// Adds c * x^exponents, dropping the term if it cancels.
  void add_term(const IntegerVector& exponents, const Rational& c);

  /// Terms sorted lexicographically descending on exponents.
  std::vector<std::pair<IntegerVector, Rational>> sorted_terms() const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend SparsePolynomial operator*(const Rational& c, SparsePolynomial a) { return a *= c; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Rendering, e.g. "2*x1^2*x2 + 1/3*x3 - 5": terms in lex-descending
  /// order of exponents; a unit coefficient is omitted on non-constant
  /// terms; exponent 1 is omitted; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void check_same_vars(const SparsePolynomial& other) const;

  std::size_t nvars_;
  Terms terms_;
};

/// (sigma . P)(x_1..x_n) = P(x_{sigma^-1(1)}, ..., x_{sigma^-1(n)}): every
/// exponent vector is moved by the position action.
SparsePolynomial act(const Permutation& sigma, const SparsePolynomial& p);

} // namespace orbitgen

#endif // ORBITGEN_POLYNOMIAL_HPP
