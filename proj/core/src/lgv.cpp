#include "hexafern/lgv.hpp"

#include <stdexcept>
#include <utility>

namespace hexafern {

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(0)) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) at(i, j) = rows[i][j];
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix lgv_matrix_Lbar_odd(const std::vector<int>& positions) {
  int prev = 0;
  for (int p : positions) {
    if (p <= prev) throw std::invalid_argument("positions must be strictly increasing and >= 1");
    prev = p;
  }
  const std::size_t k = positions.size();
  RationalMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t jj = 0; jj < k; ++jj) {
      const int a = positions[i];
      const int j = static_cast<int>(jj) + 1;
      Rational half_term(binomial(a + j - 3, 2 * j - 3), 2);
      half_term.canonicalize();
      m.at(i, jj) = half_term + Rational(binomial(a + j - 3, 2 * j - 2));
    }
  }
  return m;
}

Rational determinant_exact(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    const Rational p = m.at(col, col);
    det *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / p;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

Rational determinant_bareiss(const RationalMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), input.at(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = input.at(i, j).get_num() * (l / input.at(i, j).get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

Rational krattenthaler_product(const std::vector<Rational>& X, const std::vector<Rational>& A,
                               const Rational& C) {
  if (!X.empty() && A.size() + 1 != X.size()) {
    throw std::invalid_argument("A must hold A_2..A_k");
  }
  Rational p = 1;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) p *= (X[j] - X[i]) * (C - X[i] - X[j]);
  }
  return p;
}

RationalMatrix krattenthaler_matrix(const std::vector<Rational>& X, const std::vector<Rational>& A,
                                    const Rational& C) {
  const std::size_t k = X.size();
  if (k > 0 && A.size() + 1 != k) throw std::invalid_argument("A must hold A_2..A_k");
  RationalMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      Rational e = 1;
      for (std::size_t mm = j + 1; mm <= k; ++mm) {
        const Rational& am = A[mm - 2];
        e *= (X[i] - am - C) * (X[i] + am);
      }
      m.at(i, j - 1) = e;
    }
  }
  return m;
}

}  // namespace hexafern
