#include "pesp/exact.hpp"

#include <utility>

namespace pesp {

Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

BigInt floor(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);  // always positive
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(Rational(-r)); }

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const BigInt& b) { return b.str(); }

BigInt determinant(const std::vector<std::vector<BigInt>>& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  auto m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt determinant(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    big[i].assign(m[i].begin(), m[i].end());
  }
  return determinant(big);
}

std::size_t rank(const IntMatrix& input) {
  if (input.empty()) return 0;
  RationalMatrix m(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (auto v : input[i]) m[i].emplace_back(v);
  }
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_square(RationalMatrix a,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

}  // namespace pesp
