#pragma once

// Lattice-path determinants for the weighted quartered hexagons with an odd
// north-eastern side, and the determinant evaluation used to close them.

#include "hexafern/exact.hpp"

#include <cstddef>
#include <vector>

namespace hexafern {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n);
  /// Throws std::invalid_argument unless `rows` is square.
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Entry (i, j) is the weighted count of paths from (a_i, 0) to (j-1, 2j-2):
///   a_{i,j} = 1/2 C(a_i+j-3, 2j-3) + C(a_i+j-3, 2j-2).
/// Throws std::invalid_argument unless 1 <= a_1 < a_2 < ... < a_k.
RationalMatrix lgv_matrix_Lbar_odd(const std::vector<int>& positions);

/// Gaussian elimination over the rationals with row pivoting; 0 if singular.
Rational determinant_exact(const RationalMatrix& m);

/// Fraction-free (Bareiss) elimination after clearing each row's denominators.
Rational determinant_bareiss(const RationalMatrix& m);

/// prod_{1<=i<j<=k} (X_j - X_i)(C - X_i - X_j).
/// `A` holds A_2, ..., A_k (it has X.size() - 1 entries, or none when X is empty).
Rational krattenthaler_product(const std::vector<Rational>& X, const std::vector<Rational>& A,
                               const Rational& C);

/// Entry (i, j) = prod_{m=j+1}^{k} (X_i - A_m - C)(X_i + A_m).
RationalMatrix krattenthaler_matrix(const std::vector<Rational>& X, const std::vector<Rational>& A,
                                    const Rational& C);

}  // namespace hexafern
