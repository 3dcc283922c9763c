#pragma once

#include <cstddef>
#include <vector>

#include "idio/poly.hpp"

namespace idio {

/// Dense square matrix, row-major. Dimension is at least 1.
template <typename T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n);

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  SquareMatrix transposed() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<T> cells_;
};

using PolyMatrix = SquareMatrix<MPoly>;
using IntMatrix = SquareMatrix<Integer>;

extern template class SquareMatrix<MPoly>;
extern template class SquareMatrix<Integer>;

PolyMatrix to_poly_matrix(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination over Z[X, y, z], with row swaps for
/// zero pivots.
MPoly determinant(PolyMatrix m);

/// Bareiss over Z.
Integer determinant(IntMatrix m);

/// det(X*I - M). Entries of M must not involve X (std::invalid_argument).
MPoly charpoly(const PolyMatrix& m);

/// The same polynomial through Faddeev-LeVerrier trace recurrences with exact
/// integer division; an independent route used to cross-check charpoly().
MPoly charpoly_faddeev_leverrier(const PolyMatrix& m);

MPoly trace(const PolyMatrix& m);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace idio
