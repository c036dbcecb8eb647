#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "formality/rational.hpp"

namespace formality {

// Dense row-major matrix over the rationals. A 0xM or Mx0 matrix is legal
// and has rank 0.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;

  bool is_zero() const;

  // Copies of the selected columns, in the given order.
  Matrix select_columns(const std::vector<std::size_t>& idx) const;

  // [this | rhs] side by side; row counts must match.
  Matrix hcat(const Matrix& rhs) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;  // strictly increasing
};

// Unique reduced row echelon form.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Canonical RREF null-space basis as a cols x k matrix: one column per free
// variable (set to 1), free variables in increasing column order.
Matrix kernel_basis(const Matrix& m);

// The pivot columns of m, i.e. a deterministic basis of the column space.
Matrix column_space_basis(const Matrix& m);

// True iff the columns of a and b span the same subspace.
bool same_column_span(const Matrix& a, const Matrix& b);

}  // namespace formality
