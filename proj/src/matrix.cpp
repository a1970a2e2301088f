#include "rootline/matrix.hpp"

namespace rootline {

ExactPolynomial char_poly(const SquareMatrixQ& a) { return char_poly(a.entries()); }

Rational sigma_k(const SquareMatrixQ& a, std::size_t k) {
  if (k > a.size()) throw std::out_of_range("sigma_k: k exceeds the matrix dimension");
  ExactPolynomial chi = char_poly(a);
  Rational c = chi.top(k);
  return (k % 2 == 0) ? c : Rational(-c);
}

MatrixQ gram(const MatrixQ& columns) {
  const Eigen::Index k = columns.cols();
  MatrixQ g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      Rational dot(0);
      for (Eigen::Index r = 0; r < columns.rows(); ++r) dot += columns(r, i) * columns(r, j);
      g(i, j) = dot;
      g(j, i) = dot;
    }
  }
  return g;
}

Rational sigma_k_rank_one_sum(const std::vector<VectorQ>& vectors, std::size_t k) {
  const std::size_t m = vectors.size();
  if (k == 0) return Rational(1);
  if (k > m) return Rational(0);
  const Eigen::Index dim = m == 0 ? 0 : vectors.front().size();
  Rational total(0);
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    MatrixQ cols(dim, static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) cols.col(static_cast<Eigen::Index>(i)) = vectors[pick[i]];
    total += determinant<Rational>(gram(cols));
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

}  // namespace rootline
