#include "qagt/linalg.hpp"

#include <utility>

namespace qagt {

namespace {

// Row echelon form in place; returns pivot columns (one per pivot row).
// When rhs != nullptr the same row operations are applied to it.
std::vector<size_t> eliminate(Matrix& m, std::vector<Rational>* rhs) {
  std::vector<size_t> pivot_cols;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (size_t j = col; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
      if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    }
    const Rational inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw SingularMatrixError("determinant: matrix not square");
  const size_t n = m.rows();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m.at(p, col).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (size_t j = col; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    const Rational inv = m.at(col, col).inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col) * inv;
      for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<Rational> solve_unique(Matrix a, std::vector<Rational> b) {
  if (a.rows() != b.size()) throw SingularMatrixError("solve: shape mismatch");
  const size_t n = a.cols();
  const auto pivots = eliminate(a, &b);
  if (pivots.size() < n) throw SingularMatrixError("solve: solution not unique");
  for (size_t i = pivots.size(); i < a.rows(); ++i)
    if (!b[i].is_zero()) throw SingularMatrixError("solve: inconsistent system");
  std::vector<Rational> x(n, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::vector<std::vector<Rational>> nullspace_basis(Matrix a) {
  const size_t n = a.cols();
  const auto pivots = eliminate(a, nullptr);
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational inverse_entry(const Matrix& a, size_t i, size_t j) {
  std::vector<Rational> e(a.rows(), Rational(0));
  e[j] = Rational(1);
  return solve_unique(a, std::move(e))[i];
}

}  // namespace qagt
