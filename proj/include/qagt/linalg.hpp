#pragma once

#include <vector>

#include "qagt/errors.hpp"
#include "qagt/rational.hpp"

namespace qagt {

/// Dense matrix of exact rationals (row-major).
class Matrix {
public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Determinant of a square matrix by exact Gaussian elimination.
Rational determinant(Matrix m);

/// Solves A x = b exactly for a (possibly overdetermined) system with a
/// unique solution; throws SingularMatrixError when the solution is not
/// unique or the system is inconsistent.
std::vector<Rational> solve_unique(Matrix a, std::vector<Rational> b);

/// Basis of the nullspace of A (possibly empty).
std::vector<std::vector<Rational>> nullspace_basis(Matrix a);

/// Entry (i, j) of A^{-1}, computed by solving A x = e_j.
Rational inverse_entry(const Matrix& a, size_t i, size_t j);

}  // namespace qagt
