// Small dense matrix utilities: enough for 3-DOF modal problems and the
// error-state Kalman filter. Row-major storage, runtime dimensions.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace locodyn::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Matrix diag(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// Throws std::domain_error when the matrix is not positive definite.
Matrix cholesky(const Matrix& a);

// Solves L y = b and then L^T x = y for a lower-triangular L.
std::vector<double> cholesky_solve(const Matrix& L, const std::vector<double>& b);

// Inverse of a lower-triangular matrix.
Matrix lower_triangular_inverse(const Matrix& L);

struct SymmetricEig {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j is the eigenvector of values[j]
};

// Cyclic Jacobi rotations on a symmetric matrix. Intended for small N.
SymmetricEig jacobi_eigen(const Matrix& a, int max_sweeps = 50);

// Smallest eigenvalue of a symmetric matrix (Jacobi based).
double min_eigenvalue_symmetric(const Matrix& a);

// Gaussian elimination with partial pivoting; used for the small normal
// equations in curve fitting. Throws std::domain_error on singular systems.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

}  // namespace locodyn::linalg
