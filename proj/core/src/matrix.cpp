#include "idio/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace idio {

template <typename T>
SquareMatrix<T>::SquareMatrix(std::size_t n) : n_(n), cells_(n * n) {
  if (n == 0) throw std::invalid_argument("SquareMatrix: dimension must be at least 1");
}

template <typename T>
SquareMatrix<T> SquareMatrix<T>::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <typename T>
SquareMatrix<T> SquareMatrix<T>::transposed() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template class SquareMatrix<MPoly>;
template class SquareMatrix<Integer>;

PolyMatrix to_poly_matrix(const IntMatrix& m) {
  PolyMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = MPoly(m(i, j));
  return out;
}

namespace {

bool is_zero(const MPoly& p) { return p.is_zero(); }
bool is_zero(const Integer& v) { return v == 0; }

MPoly divide(const MPoly& num, const MPoly& den) { return exact_div(num, den); }
Integer divide(const Integer& num, const Integer& den) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Every leading principal minor of the working matrix is divisible by the
// previous pivot, so each division below is exact.
template <typename T>
T bareiss(SquareMatrix<T> m) {
  const std::size_t n = m.size();
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m(swap_row, k))) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    const T& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T& lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = pivot * m(i, j) - lead * m(k, j);
        m(i, j) = divide(value, prev);
      }
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

}  // namespace

MPoly determinant(PolyMatrix m) { return bareiss(std::move(m)); }

Integer determinant(IntMatrix m) { return bareiss(std::move(m)); }

MPoly charpoly(const PolyMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix shifted(n);
  const MPoly x = MPoly::X();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).depends_on_x())
        throw std::invalid_argument("charpoly: matrix entries must not involve X");
      shifted(i, j) = -m(i, j);
    }
    shifted(i, i) += x;
  }
  // Leading principal minors of XI - M are monic in X, so no pivot is zero.
  return bareiss(std::move(shifted));
}

MPoly trace(const PolyMatrix& m) {
  MPoly t;
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PolyMatrix product: size mismatch");
  const std::size_t n = a.size();
  PolyMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

MPoly charpoly_faddeev_leverrier(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).depends_on_x())
        throw std::invalid_argument("charpoly_faddeev_leverrier: entries must not involve X");

  // N_1 = I, c_{n-1} = -tr(M); N_k = M N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M N_k)/k.
  MPoly result = MPoly::monomial(1, {static_cast<unsigned>(n), 0, 0});
  PolyMatrix acc = PolyMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix product = m * acc;
    MPoly c = exact_div(-trace(product), Integer(static_cast<unsigned long>(k)));
    result += c * MPoly::monomial(1, {static_cast<unsigned>(n - k), 0, 0});
    if (k == n) break;
    acc = std::move(product);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  }
  return result;
}

}  // namespace idio
