// Exact square matrices and their characteristic polynomials.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "rootline/polynomial.hpp"

namespace rootline {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

/// Square rational matrix with a symmetry flag that is only ever set after
/// checking A == A^T.
class SquareMatrixQ {
 public:
  explicit SquareMatrixQ(MatrixQ entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("SquareMatrixQ: matrix is not square");
    symmetric_ = true;
    for (Eigen::Index i = 0; i < entries_.rows() && symmetric_; ++i)
      for (Eigen::Index j = i + 1; j < entries_.cols(); ++j)
        if (entries_(i, j) != entries_(j, i)) {
          symmetric_ = false;
          break;
        }
  }
  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  bool symmetric() const { return symmetric_; }
  const MatrixQ& entries() const { return entries_; }

 private:
  MatrixQ entries_;
  bool symmetric_ = false;
};

/// Coefficients of det(xI - A) from the leading one down, [1, c_1, ..., c_n],
/// by Berkowitz's division-free recursion. Works over any commutative ring.
template <typename Derived>
std::vector<typename Derived::Scalar> berkowitz_vector(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Start from the trailing 1x1 block and grow to the full matrix, each step
  // multiplying by the Toeplitz matrix of the current leading row/column.
  std::vector<Scalar> vec{Scalar(1)};
  for (Eigen::Index start = n - 1; start >= 0; --start) {
    const Eigen::Index m = n - start;  // size of the current block
    const Scalar corner = a(start, start);
    // diag[0] = 1, diag[1] = -a11, diag[j + 2] = -R A^j C
    std::vector<Scalar> diag(static_cast<std::size_t>(m + 1), Scalar(0));
    diag[0] = Scalar(1);
    diag[1] = Scalar(-corner);
    if (m > 1) {
      const Eigen::Index sub = m - 1;
      Vector<Scalar> col(sub);
      for (Eigen::Index i = 0; i < sub; ++i) col(i) = a(start + 1 + i, start);
      for (Eigen::Index j = 0; j + 2 <= m; ++j) {
        Scalar dot(0);
        for (Eigen::Index i = 0; i < sub; ++i) dot += a(start, start + 1 + i) * col(i);
        diag[static_cast<std::size_t>(j + 2)] = Scalar(-dot);
        if (j + 3 <= m) {
          Vector<Scalar> next(sub);
          for (Eigen::Index r = 0; r < sub; ++r) {
            Scalar acc(0);
            for (Eigen::Index c = 0; c < sub; ++c) {
              const Scalar& entry = a(start + 1 + r, start + 1 + c);
              if (entry != 0) acc += entry * col(c);
            }
            next(r) = acc;
          }
          col = std::move(next);
        }
      }
    }
    std::vector<Scalar> out(static_cast<std::size_t>(m + 1), Scalar(0));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < vec.size() && j <= i; ++j) out[i] += diag[i - j] * vec[j];
    vec = std::move(out);
  }
  return vec;
}

/// det(xI - A) as a polynomial over the matrix scalar.
template <typename Derived>
Polynomial<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& a) {
  auto top_down = berkowitz_vector(a);
  std::reverse(top_down.begin(), top_down.end());
  return Polynomial<typename Derived::Scalar>(std::move(top_down));
}

ExactPolynomial char_poly(const SquareMatrixQ& a);

/// Sum of all principal k x k minors, read from det(xI - A) = sum_k (-1)^k sigma_k x^{n-k}.
Rational sigma_k(const SquareMatrixQ& a, std::size_t k);

/// Determinant by fraction-free (Bareiss) elimination; exact over integral domains
/// where the Bareiss divisions are exact, and over fields.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Gram matrix V^T V of the columns of V.
MatrixQ gram(const MatrixQ& columns);

/// sigma_k of sum_i v_i v_i^T by Cauchy-Binet: the sum over k-subsets of
/// the Gram determinants.
Rational sigma_k_rank_one_sum(const std::vector<VectorQ>& vectors, std::size_t k);

}  // namespace rootline
