#ifndef DIFFLIE_MATRIX_HPP
#define DIFFLIE_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "difflie/scalar.hpp"

namespace difflie {

class CompositionNonzero : public std::runtime_error {
 public:
  CompositionNonzero() : std::runtime_error("d_out * d_in is not zero") {}
};

class DimensionMismatch : public std::runtime_error {
 public:
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& a) const;
  Matrix transpose() const;
  bool operator==(const Matrix& other) const;
  bool is_zero() const;

  // Blocks: [[a, b], [c, d]] with compatible shapes.
  static Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
std::size_t homology_dim(const Matrix& d_out, const Matrix& d_in);
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace difflie

#endif
