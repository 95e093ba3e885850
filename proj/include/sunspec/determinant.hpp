#pragma once

#include "sunspec/bignum.hpp"

#include <Eigen/Core>

#include <utility>

namespace sunspec {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using BigIntMatrix = DenseMatrix<BigInt>;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Scalar must be an integral domain where the Bareiss quotients are exact under
/// operator/ (BigInt, or a fixed-width integer when no overflow is possible).
/// The pivot in each column is the first nonzero entry at or below the diagonal; row
/// swaps flip the sign. An empty matrix has determinant 1.
template <typename Derived>
typename Derived::Scalar ff_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  eigen_assert(input.rows() == input.cols());

  DenseMatrix<Scalar> m = input;
  const Index n = m.rows();
  if (n == 0) return Scalar(1);

  bool negate = false;
  Scalar prev_pivot(1);
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot_row = k;
    while (pivot_row < n && m(pivot_row, k) == Scalar(0)) ++pivot_row;
    if (pivot_row == n) return Scalar(0);
    if (pivot_row != k) {
      m.row(k).swap(m.row(pivot_row));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev_pivot;
      }
      m(i, k) = Scalar(0);
    }
    prev_pivot = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace sunspec
