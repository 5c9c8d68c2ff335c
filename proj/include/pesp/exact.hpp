#pragma once

// Exact integer and rational helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pesp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Floor/ceil division and non-negative remainder for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

Rational make_rational(std::int64_t num, std::int64_t den);
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

// "13/5" for non-integers, "3" for integers.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& b);

// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt determinant(const std::vector<std::vector<BigInt>>& m);
BigInt determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a,
                                                  std::vector<Rational> rhs);

}  // namespace pesp
