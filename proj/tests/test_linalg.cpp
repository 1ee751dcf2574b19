#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dressed/linalg.hpp"

using dressed::Matrix;

TEST_CASE("matrix construction and element access") {
  Matrix m(2, 3, 1.5);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == 1.5);
  m(0, 1) = -2.0;
  CHECK(m(0, 1) == -2.0);
  CHECK(!m.square());
  CHECK_THROWS_AS(Matrix(-1, 2), std::invalid_argument);
}

TEST_CASE("identity, norms and transpose") {
  Matrix eye = Matrix::identity(3);
  CHECK(eye.frobenius_norm() == doctest::Approx(std::sqrt(3.0)));
  CHECK(eye.max_abs() == 1.0);
  CHECK(eye.max_asymmetry() == 0.0);

  Matrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = -2.0;
  a(1, 1) = 3.0;
  CHECK(a.max_asymmetry() == 4.0);
  Matrix at = a.transposed();
  CHECK(at(0, 1) == -2.0);
  CHECK(at(1, 0) == 2.0);
}

TEST_CASE("matrix products") {
  Matrix a(2, 2);
  a(0, 0) = 1.0; a(0, 1) = 2.0;
  a(1, 0) = 3.0; a(1, 1) = 4.0;
  Matrix b = a * Matrix::identity(2);
  CHECK(b(1, 0) == 3.0);

  std::vector<double> x{1.0, -1.0};
  auto y = a * x;
  CHECK(y[0] == -1.0);
  CHECK(y[1] == -1.0);

  Matrix diff = a - b;
  CHECK(diff.max_abs() == 0.0);
  Matrix sum = a + a;
  CHECK(sum(0, 1) == 4.0);

  CHECK_THROWS_AS(a * Matrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(a * std::vector<double>{1.0}, std::invalid_argument);
  CHECK_THROWS_AS(a + Matrix(3, 3), std::invalid_argument);
}
