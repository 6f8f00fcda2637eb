#pragma once

#include <Eigen/Core>
#include <type_traits>
#include <utility>

#include "belyi/errors.hpp"

namespace belyi {

namespace detail {

template <typename Scalar>
Scalar checked_mul(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar out{};
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in determinant");
    return out;
  } else {
    return a * b;
  }
}

template <typename Scalar>
Scalar checked_sub(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar out{};
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in determinant");
    return out;
  } else {
    return a - b;
  }
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every division performed is exact, so the result is exact for any integral
/// scalar. For built-in integer types all products and differences are
/// overflow-checked and OverflowError is thrown instead of wrapping.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(input.rows() == input.cols());

  Matrix m = input;
  const Eigen::Index size = m.rows();
  if (size == 0) return Scalar(1);

  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < size; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index pivot = k + 1;
      while (pivot < size && m(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == size) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < size; ++i) {
      for (Eigen::Index j = k + 1; j < size; ++j) {
        const Scalar num = detail::checked_sub(detail::checked_mul(m(i, j), m(k, k)),
                                               detail::checked_mul(m(i, k), m(k, j)));
        m(i, j) = num / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return sign * m(size - 1, size - 1);
}

/// Exact rank by fraction-free elimination with row and column search.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        const Scalar num = detail::checked_sub(detail::checked_mul(m(i, j), m(rank, col)),
                                               detail::checked_mul(m(i, col), m(rank, j)));
        m(i, j) = num / previous;
      }
      m(i, col) = Scalar(0);
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace belyi
