#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcanon {

// Exact arithmetic everywhere. No floating point enters any computation;
// section dimensions, normal forms and polytope data are all integer or
// rational and arbitrary precision.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct UnboundedPolyhedron : std::runtime_error {
  explicit UnboundedPolyhedron(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidFan : std::runtime_error {
  explicit InvalidFan(const std::string& what) : std::runtime_error(what) {}
};

struct DependentClasses : std::runtime_error {
  explicit DependentClasses(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedOperation : std::runtime_error {
  explicit UnsupportedOperation(const std::string& what) : std::runtime_error(what) {}
};

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

// floor(n/d) for d != 0, exact semantics for negative operands.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d) != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d) != 0 && ((n < 0) == (d < 0))) ++q;
  return q;
}

inline Integer rat_floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Integer rat_ceil(const Rational& r) {
  return ceil_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

// C(n, k) as an exact integer; zero for k < 0 or k > n (n >= 0).
inline Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && n < k) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline std::int64_t to_int64(const Integer& a) {
  return a.convert_to<std::int64_t>();
}

}  // namespace coxcanon
