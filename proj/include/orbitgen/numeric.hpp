#ifndef ORBITGEN_NUMERIC_HPP
#define ORBITGEN_NUMERIC_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitgen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

} // namespace orbitgen

#endif // ORBITGEN_NUMERIC_HPP
