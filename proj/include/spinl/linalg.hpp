#pragma once

#include <vector>

#include "spinl/rational.hpp"

namespace spinl {

// Dense exact matrices over Q, row-major.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static Matrix identity(std::size_t n);

  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  Matrix transpose() const;
  bool operator==(const Matrix& o) const = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

Rational determinant(const Matrix& a);
// Throws domain_error on a singular matrix.
Matrix inverse(const Matrix& a);
// Row vector x with x * a = b (a square, nonsingular).
std::vector<Rational> solve_left(const Matrix& a, const std::vector<Rational>& b);

}  // namespace spinl
