#pragma once

#include <cstddef>
#include <vector>

// Small dense real matrix type. The truncated qubit-photon spaces used here
// top out at a few hundred rows, so a flat row-major buffer is plenty.

namespace dressed {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool square() const { return rows_ == cols_ && rows_ > 0; }

  double frobenius_norm() const;
  double max_abs() const;
  // Largest |a(i,j) - a(j,i)|; zero for an exactly symmetric matrix.
  double max_asymmetry() const;

  Matrix transposed() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

}  // namespace dressed
